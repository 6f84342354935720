#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace unicas::rootdata {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);

/// A simple Lie algebra by Cartan type. Construction validates the rank.
class AlgebraId {
 public:
  /// Throws std::invalid_argument for ranks outside A>=1, B>=2, C>=2, D>=3,
  /// E in {6,7,8}, F4, G2.
  AlgebraId(Family family, int rank);

  /// Accepts Dynkin names ("A4", "E8", "G2") and classical names
  /// ("sl(5)", "su(5)", "so(10)", "so(9)", "sp(6)"). Throws ParseError.
  static AlgebraId parse(std::string_view text);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  bool is_classical() const;

  /// Dimension N of the defining matrix algebra (sl_N, so_N, sp_N); classical only.
  int defining_dimension() const;

  /// Whether closed-form X2 highest weights are available: A>=3, B>=4, C>=3,
  /// D>=5 and every exceptional algebra.
  bool x2_validated() const;

  /// "D5"
  std::string str() const;
  /// "so(10)" for classical families, the Dynkin name otherwise.
  std::string classical_name() const;

  friend bool operator==(const AlgebraId&, const AlgebraId&) = default;
  friend auto operator<=>(const AlgebraId&, const AlgebraId&) = default;

 private:
  Family family_;
  int rank_;
};

std::ostream& operator<<(std::ostream& os, const AlgebraId& id);

/// Smallest rank with a validated X2 weight for the family.
int min_x2_rank(Family f);

}  // namespace unicas::rootdata
