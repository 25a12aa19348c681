// Copyright 2026 The vickset Authors
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

#include "vickset/combinatorial.hpp"
#include "vickset/enumeration.hpp"
#include "vickset/error.hpp"
#include "vickset/expression.hpp"
#include "vickset/instance_io.hpp"
#include "vickset/laws.hpp"
#include "vickset/quotient.hpp"
#include "vickset/rational.hpp"
#include "vickset/relation.hpp"
#include "vickset/single_good.hpp"
#include "vickset/text.hpp"
#include "vickset/value.hpp"

namespace vickset {
inline constexpr const char* kVersion = "0.1.0";
}  // namespace vickset
