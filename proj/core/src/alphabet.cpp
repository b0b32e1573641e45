// Copyright 2026 The medsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "medsim/alphabet.hpp"

namespace medsim {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw ValidationError("alphabet must be non-empty");
  for (int i = 0; i < static_cast<int>(symbols_.size()); ++i) {
    if (!index_.emplace(symbols_[i], i).second)
      throw ValidationError("duplicate symbol '" + symbols_[i] + "' in alphabet");
  }
}

int Alphabet::index_of(const std::string& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) throw ValidationError("unknown symbol '" + s + "'");
  return it->second;
}

}  // namespace medsim
