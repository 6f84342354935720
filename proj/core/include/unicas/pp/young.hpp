#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace unicas::pp {

/// Partition drawn as a Young diagram; rows weakly decreasing and positive.
class YoungDiagram {
 public:
  YoungDiagram() = default;
  /// Throws std::invalid_argument on non-positive or increasing rows.
  explicit YoungDiagram(std::vector<int> rows);

  /// "[2,1,1]"; "[]" is the empty diagram.
  static YoungDiagram parse(std::string_view text);
  /// (length^height) box diagram.
  static YoungDiagram rectangle(int height, int length);

  const std::vector<int>& rows() const { return rows_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  int column_count() const { return rows_.empty() ? 0 : rows_.front(); }
  int size() const;
  bool empty() const { return rows_.empty(); }
  bool is_rectangular() const;
  /// Row i (0-based), zero past the last row.
  int row(int i) const { return i < row_count() ? rows_[static_cast<std::size_t>(i)] : 0; }

  std::string str() const;

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
  friend auto operator<=>(const YoungDiagram&, const YoungDiagram&) = default;

 private:
  std::vector<int> rows_;
};

YoungDiagram conjugate(const YoungDiagram& d);

/// Corner coordinates of a diagram: A holds the distinct column heights and B
/// the distinct row lengths, both ascending; A_0 = B_0 = 0 are implicit.
struct ABProfile {
  std::vector<int> A;
  std::vector<int> B;

  /// Throws std::invalid_argument unless A, B are strictly increasing,
  /// positive and of equal length.
  ABProfile(std::vector<int> a, std::vector<int> b);
  ABProfile() = default;

  int corners() const { return static_cast<int>(A.size()); }
  /// A_i with the implicit A_0 = 0 (i in 0..k).
  int a(int i) const { return i == 0 ? 0 : A[static_cast<std::size_t>(i - 1)]; }
  int b(int i) const { return i == 0 ? 0 : B[static_cast<std::size_t>(i - 1)]; }
  ABProfile swapped() const { return ABProfile(B, A); }

  /// "A=[1,3];B=[1,2]"
  std::string str() const;
  static ABProfile parse(std::string_view text);

  friend bool operator==(const ABProfile&, const ABProfile&) = default;
};

ABProfile ab_from_diagram(const YoungDiagram& d);
YoungDiagram diagram_from_ab(const ABProfile& p);

std::ostream& operator<<(std::ostream& os, const YoungDiagram& d);
std::ostream& operator<<(std::ostream& os, const ABProfile& p);

}  // namespace unicas::pp
