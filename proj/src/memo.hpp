// Copyright 2026 The bernfact Authors
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

#ifndef BERNFACT_SRC_MEMO_HPP_
#define BERNFACT_SRC_MEMO_HPP_

#include <map>
#include <mutex>
#include <optional>

namespace bernfact::detail {

// Write-once cache. A value is computed outside the lock; if two threads race
// on the same key the first insertion wins and both see identical results.
template <class Key, class Value>
class Memo {
 public:
  template <class Compute>
  Value get(const Key& key, Compute&& compute) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = values_.find(key);
      if (it != values_.end()) return it->second;
    }
    Value v = compute();
    std::lock_guard<std::mutex> lock(mu_);
    return values_.emplace(key, std::move(v)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<Key, Value> values_;
};

}  // namespace bernfact::detail

#endif  // BERNFACT_SRC_MEMO_HPP_
