// Copyright 2026 The xosfair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "xosfair/labeling.hpp"

namespace xosfair::labeling::detail {

// Throws InputError on malformed problems and CapacityError over budget.
void validate(const Problem& problem, const EnumerationLimits& limits);

}  // namespace xosfair::labeling::detail
