/*
   Copyright 2026 The polya-cert authors

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
#include "polya/sym_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace polya {

namespace {

void check_same_size(const SymMatrixQ& a, const SymMatrixQ& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("matrix size mismatch: " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  }
}

}  // namespace

SymMatrixQ::SymMatrixQ(int size)
    : size_(size), entries_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size)) {
  if (size_ < 1) throw std::invalid_argument("matrix size must be positive");
}

SymMatrixQ::SymMatrixQ(int size, std::vector<Rational> row_major) : SymMatrixQ(size) {
  if (row_major.size() != entries_.size()) {
    throw std::invalid_argument("expected " + std::to_string(entries_.size()) +
                                " entries, got " + std::to_string(row_major.size()));
  }
  entries_ = std::move(row_major);
}

SymMatrixQ SymMatrixQ::identity(int size) {
  SymMatrixQ m(size);
  for (int i = 0; i < size; ++i) m.set(i, i, 1);
  return m;
}

SymMatrixQ SymMatrixQ::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const int size = static_cast<int>(rows.size());
  SymMatrixQ m(size);
  for (int i = 0; i < size; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != size) {
      throw std::invalid_argument("row " + std::to_string(i) + " has " +
                                  std::to_string(rows[static_cast<std::size_t>(i)].size()) +
                                  " entries, expected " + std::to_string(size));
    }
    for (int j = 0; j < size; ++j) {
      m.entries_[static_cast<std::size_t>(i * size + j)] =
          rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return m;
}

SymMatrixQ SymMatrixQ::rank_one(std::span<const Rational> v) {
  SymMatrixQ m(static_cast<int>(v.size()));
  for (int i = 0; i < m.size_; ++i) {
    for (int j = 0; j < m.size_; ++j) {
      m.entries_[static_cast<std::size_t>(i * m.size_ + j)] =
          v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
    }
  }
  return m;
}

const Rational& SymMatrixQ::at(int i, int j) const {
  return entries_[static_cast<std::size_t>(i * size_ + j)];
}

void SymMatrixQ::set(int i, int j, Rational value) {
  entries_[static_cast<std::size_t>(i * size_ + j)] = value;
  entries_[static_cast<std::size_t>(j * size_ + i)] = std::move(value);
}

bool SymMatrixQ::is_symmetric() const {
  for (int i = 0; i < size_; ++i) {
    for (int j = i + 1; j < size_; ++j) {
      if (at(i, j) != at(j, i)) return false;
    }
  }
  return true;
}

bool SymMatrixQ::is_zero() const {
  for (const Rational& e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

SymMatrixQ& SymMatrixQ::operator+=(const SymMatrixQ& other) {
  check_same_size(*this, other);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

SymMatrixQ operator+(SymMatrixQ a, const SymMatrixQ& b) {
  a += b;
  return a;
}

SymMatrixQ operator-(const SymMatrixQ& a, const SymMatrixQ& b) {
  check_same_size(a, b);
  SymMatrixQ out(a.size_);
  for (std::size_t k = 0; k < out.entries_.size(); ++k) {
    out.entries_[k] = a.entries_[k] - b.entries_[k];
  }
  return out;
}

SymMatrixQ operator*(const Rational& c, const SymMatrixQ& a) {
  SymMatrixQ out(a.size_);
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] = c * a.entries_[k];
  return out;
}

}  // namespace polya
