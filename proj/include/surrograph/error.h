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

#ifndef SURROGRAPH_ERROR_H_
#define SURROGRAPH_ERROR_H_

#include <stdexcept>
#include <string>

namespace surrograph {

// Raised for malformed inputs: bad files, invalid ids, violated preconditions.
// The CLI maps it to exit status 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace surrograph

#endif  // SURROGRAPH_ERROR_H_
