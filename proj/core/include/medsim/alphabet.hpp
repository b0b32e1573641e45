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

#ifndef MEDSIM_ALPHABET_HPP
#define MEDSIM_ALPHABET_HPP

#include <map>
#include <string>
#include <vector>

#include "medsim/errors.hpp"

namespace medsim {

// Ordered set of distinct symbol labels. The order is canonical: index i
// always refers to the same symbol for the lifetime of the object.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols);

  int size() const { return static_cast<int>(symbols_.size()); }
  const std::string& symbol(int i) const { return symbols_.at(i); }
  const std::vector<std::string>& symbols() const { return symbols_; }

  bool contains(const std::string& s) const { return index_.count(s) != 0; }
  // Throws ValidationError for unknown symbols.
  int index_of(const std::string& s) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_;
  }
  friend bool operator!=(const Alphabet& a, const Alphabet& b) { return !(a == b); }

 private:
  std::vector<std::string> symbols_;
  std::map<std::string, int> index_;
};

}  // namespace medsim

#endif  // MEDSIM_ALPHABET_HPP
