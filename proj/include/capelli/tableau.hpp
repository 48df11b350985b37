#ifndef CAPELLI_TABLEAU_HPP
#define CAPELLI_TABLEAU_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "capelli/partition.hpp"

namespace capelli {

// Bijective filling of a Young diagram with 1..n, increasing along rows and
// columns.
class StandardTableau {
 public:
  StandardTableau(Partition shape, std::vector<std::vector<int>> rows)
      : shape_(std::move(shape)), rows_(std::move(rows)) {
    validate();
  }

  const Partition& shape() const { return shape_; }
  int n() const { return shape_.size(); }
  int entry(int row, int col) const { return rows_[row][col]; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  // (row, col), 0-based, of the box holding p.
  std::pair<int, int> position_of(int p) const {
    for (int r = 0; r < shape_.length(); ++r)
      for (int c = 0; c < shape_.part(r); ++c)
        if (rows_[r][c] == p) return {r, c};
    throw std::out_of_range("entry not in tableau");
  }

  // Content sequence c_p = column - row (1-based difference) for p = 1..n.
  std::vector<int> contents() const {
    std::vector<int> c(n());
    for (int r = 0; r < shape_.length(); ++r)
      for (int col = 0; col < shape_.part(r); ++col)
        c[rows_[r][col] - 1] = col - r;
    return c;
  }

  // l_p = 1-based row of entry p.
  std::vector<int> row_indices() const {
    std::vector<int> l(n());
    for (int r = 0; r < shape_.length(); ++r)
      for (int col = 0; col < shape_.part(r); ++col)
        l[rows_[r][col] - 1] = r + 1;
    return l;
  }

  std::vector<int> reading_word() const {
    std::vector<int> w;
    for (const auto& row : rows_) w.insert(w.end(), row.begin(), row.end());
    return w;
  }

  // Exchanges entries r and r+1; the result must again be standard.
  StandardTableau apply_transposition(int r) const {
    auto rows = rows_;
    for (auto& row : rows)
      for (auto& e : row) {
        if (e == r)
          e = r + 1;
        else if (e == r + 1)
          e = r;
      }
    return StandardTableau(shape_, std::move(rows));
  }

  bool operator==(const StandardTableau& o) const { return rows_ == o.rows_; }

  std::string to_string() const {
    std::string s;
    for (const auto& row : rows_) {
      for (size_t i = 0; i < row.size(); ++i)
        s += (i ? " " : "") + std::to_string(row[i]);
      s += "\n";
    }
    return s;
  }

 private:
  void validate() const {
    int n = shape_.size();
    std::vector<bool> seen(n + 1, false);
    if (static_cast<int>(rows_.size()) != shape_.length())
      throw std::invalid_argument("row count mismatch");
    for (int r = 0; r < shape_.length(); ++r) {
      if (static_cast<int>(rows_[r].size()) != shape_.part(r))
        throw std::invalid_argument("row length mismatch");
      for (int c = 0; c < shape_.part(r); ++c) {
        int e = rows_[r][c];
        if (e < 1 || e > n || seen[e])
          throw std::invalid_argument("entries not a bijection onto 1..n");
        seen[e] = true;
        if (c > 0 && rows_[r][c - 1] >= e)
          throw std::invalid_argument("rows must increase");
        if (r > 0 && rows_[r - 1][c] >= e)
          throw std::invalid_argument("columns must increase");
      }
    }
  }

  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

// Entries placed column by column, top-to-bottom, columns left-to-right.
inline StandardTableau column_tableau(const Partition& shape) {
  std::vector<std::vector<int>> rows(shape.length());
  for (int r = 0; r < shape.length(); ++r) rows[r].resize(shape.part(r));
  int next = 1;
  Partition conj = shape.conjugate();
  for (int c = 0; c < shape.part(0); ++c)
    for (int r = 0; r < conj.part(c); ++r) rows[r][c] = next++;
  return StandardTableau(shape, std::move(rows));
}

// All standard tableaux of the shape, ordered lexicographically by the
// row-reading word so fixtures are stable.
inline std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
  int n = shape.size();
  std::vector<std::vector<int>> rows(shape.length());
  for (int r = 0; r < shape.length(); ++r) rows[r].resize(shape.part(r), 0);
  std::vector<int> filled(shape.length(), 0);
  std::vector<StandardTableau> out;
  auto rec = [&](auto&& self, int next) -> void {
    if (next > n) {
      out.emplace_back(shape, rows);
      return;
    }
    for (int r = 0; r < shape.length(); ++r) {
      int c = filled[r];
      if (c >= shape.part(r)) continue;
      if (r > 0 && filled[r - 1] <= c) continue;
      rows[r][c] = next;
      ++filled[r];
      self(self, next + 1);
      --filled[r];
      rows[r][c] = 0;
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(),
            [](const StandardTableau& a, const StandardTableau& b) {
              return a.reading_word() < b.reading_word();
            });
  return out;
}

}  // namespace capelli

#endif
