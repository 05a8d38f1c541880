// Copyright 2026 The qframe Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include "qf/ir/composite.hpp"

namespace qf::ir {

/**
 * JSON persistence.
 *
 * Layout: `{"composites":[C...]}` where a composite is
 * `{"kind":"composite","name":..,"variables":[..],"children":[..]}` and an instruction is
 * `{"kind":"instruction","name":..,"bits":[..],"params":[P..],"enabled":..,"cbits":[..]}`.
 * Parameters are tagged `{"t":"int"|"real"|"sym"|"txt","v":..}`; symbols carry their source
 * text. Malformed input raises SourceError(ParseError).
 */
std::string serializeIR(const IRContainer &ir, int indent = 2);
IRContainer deserializeIR(std::string_view text);

std::string serializeComposite(const Composite &composite, int indent = -1);
Composite deserializeComposite(std::string_view text);

} // namespace qf::ir
