/*
Copyright 2026 The xclust Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

// Exhaustive reference solvers for small instances. They share only the core
// primitives with the production solvers and refuse inputs beyond hard size
// limits with ResourceError.

#ifndef XCLUST_ORACLE_H_
#define XCLUST_ORACLE_H_

#include <optional>

#include "xclust/explainable.h"
#include "xclust/explanation.h"

namespace xclust {

// Every shape times every assignment of canonical cuts; n <= 10, d <= 2,
// k <= 4.
ExplainableResult BruteExplainable(const Dataset& ds, int k, CostKind kind);

// First removal set in (size, lexicographic) order that makes the clustering
// explainable; n <= 12, s <= 4, k <= 3.
std::optional<ExplanationResult> BruteExplanation(const Clustering& cl, int s);

// Minimum cost over all partitions into k nonempty parts; n <= 8.
double BruteUnconstrained(const Dataset& ds, int k, CostKind kind);

}  // namespace xclust

#endif  // XCLUST_ORACLE_H_
