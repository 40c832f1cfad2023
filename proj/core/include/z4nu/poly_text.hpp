/*
   Copyright 2026 The z4nu Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#pragma once

#include <string>
#include <string_view>

#include "z4nu/poly.hpp"

namespace z4nu {

enum class TermOrder { Descending, Ascending };

RPoly parse_rpoly(std::string_view text, Theta t);
QuadPoly parse_quad(std::string_view text);
BinPoly parse_bin(std::string_view text);

std::string to_string(const RPoly& f, TermOrder order = TermOrder::Descending);
std::string to_string(const QuadPoly& f, TermOrder order = TermOrder::Descending);
std::string to_string(const BinPoly& f, TermOrder order = TermOrder::Descending);

}  // namespace z4nu
