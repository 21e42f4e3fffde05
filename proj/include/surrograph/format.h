// Copyright 2026 The Surrograph Authors.
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

#ifndef SURROGRAPH_FORMAT_H_
#define SURROGRAPH_FORMAT_H_

#include <string>
#include <string_view>
#include <vector>

namespace surrograph {

// Shortest round-trip decimal rendering; locale independent.
std::string format_double(double x);

// RFC 4180 quoting when the field contains a comma, quote or newline.
std::string csv_escape(std::string_view field);

// Splits one CSV record. Quoted fields may contain commas and doubled quotes.
std::vector<std::string> split_csv_line(std::string_view line);

}  // namespace surrograph

#endif  // SURROGRAPH_FORMAT_H_
