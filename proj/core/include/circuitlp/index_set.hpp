// Copyright 2026 The circuitlp Authors.
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

#ifndef CIRCUITLP_INDEX_SET_HPP_
#define CIRCUITLP_INDEX_SET_HPP_

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace circuitlp {

using Index = std::size_t;

// Sorted, duplicate-free set of column (or row) indices, 0-based.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<Index> items) : items_(items) { normalize(); }
  explicit IndexSet(std::vector<Index> items) : items_(std::move(items)) {
    normalize();
  }

  static IndexSet range(Index n) {
    IndexSet s;
    s.items_.resize(n);
    for (Index i = 0; i < n; ++i) s.items_[i] = i;
    return s;
  }

  bool contains(Index i) const {
    return std::binary_search(items_.begin(), items_.end(), i);
  }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  Index operator[](std::size_t k) const { return items_[k]; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const std::vector<Index>& items() const { return items_; }

  void insert(Index i) {
    auto it = std::lower_bound(items_.begin(), items_.end(), i);
    if (it == items_.end() || *it != i) items_.insert(it, i);
  }

  IndexSet unite(const IndexSet& other) const {
    std::vector<Index> out;
    std::set_union(begin(), end(), other.begin(), other.end(),
                   std::back_inserter(out));
    return IndexSet(std::move(out));
  }
  IndexSet intersect(const IndexSet& other) const {
    std::vector<Index> out;
    std::set_intersection(begin(), end(), other.begin(), other.end(),
                          std::back_inserter(out));
    return IndexSet(std::move(out));
  }
  IndexSet minus(const IndexSet& other) const {
    std::vector<Index> out;
    std::set_difference(begin(), end(), other.begin(), other.end(),
                        std::back_inserter(out));
    return IndexSet(std::move(out));
  }
  bool is_subset_of(const IndexSet& other) const {
    return std::includes(other.begin(), other.end(), begin(), end());
  }
  // [0, n) \ this
  IndexSet complement(Index n) const { return range(n).minus(*this); }

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.items_ == b.items_;
  }
  friend bool operator<(const IndexSet& a, const IndexSet& b) {
    return a.items_ < b.items_;
  }

  std::string to_string() const;

 private:
  void normalize() {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  std::vector<Index> items_;
};

}  // namespace circuitlp

#endif  // CIRCUITLP_INDEX_SET_HPP_
