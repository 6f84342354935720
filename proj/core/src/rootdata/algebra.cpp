#include "unicas/rootdata/algebra.hpp"

#include <cctype>
#include <charconv>
#include <ostream>
#include <stdexcept>

#include "unicas/exact/rational.hpp"

namespace unicas::rootdata {

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

AlgebraId::AlgebraId(Family family, int rank) : family_(family), rank_(rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) {
    throw std::invalid_argument(std::string("invalid rank ") + std::to_string(rank) + " for family " +
                                family_letter(family));
  }
}

namespace {

int parse_positive(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || v <= 0) {
    throw ParseError("cannot parse algebra name '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

AlgebraId AlgebraId::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const std::string_view whole = text;
  try {
    auto open = text.find('(');
    if (open != std::string_view::npos) {
      if (text.back() != ')') throw ParseError("cannot parse algebra name '" + std::string(whole) + "'");
      std::string name(text.substr(0, open));
      for (auto& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      const int dim = parse_positive(text.substr(open + 1, text.size() - open - 2), whole);
      if (name == "sl" || name == "su") return AlgebraId(Family::A, dim - 1);
      if (name == "so") return dim % 2 == 0 ? AlgebraId(Family::D, dim / 2) : AlgebraId(Family::B, (dim - 1) / 2);
      if (name == "sp") {
        if (dim % 2 != 0) throw ParseError("sp(N) needs even N: '" + std::string(whole) + "'");
        return AlgebraId(Family::C, dim / 2);
      }
      throw ParseError("unknown classical algebra '" + std::string(whole) + "'");
    }
    if (text.size() < 2) throw ParseError("cannot parse algebra name '" + std::string(whole) + "'");
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
    if (letter < 'A' || letter > 'G') throw ParseError("unknown Cartan type in '" + std::string(whole) + "'");
    return AlgebraId(static_cast<Family>(letter - 'A'), parse_positive(text.substr(1), whole));
  } catch (const std::invalid_argument& e) {
    if (dynamic_cast<const ParseError*>(&e) != nullptr) throw;
    throw ParseError(e.what());
  }
}

bool AlgebraId::is_classical() const {
  return family_ == Family::A || family_ == Family::B || family_ == Family::C || family_ == Family::D;
}

int AlgebraId::defining_dimension() const {
  switch (family_) {
    case Family::A: return rank_ + 1;
    case Family::B: return 2 * rank_ + 1;
    case Family::C:
    case Family::D: return 2 * rank_;
    default: throw std::logic_error(str() + " has no defining matrix dimension");
  }
}

int min_x2_rank(Family f) {
  switch (f) {
    case Family::A: return 3;
    case Family::B: return 4;
    case Family::C: return 3;
    case Family::D: return 5;
    case Family::E: return 6;
    case Family::F: return 4;
    case Family::G: return 2;
  }
  return 0;
}

bool AlgebraId::x2_validated() const { return rank_ >= min_x2_rank(family_); }

std::string AlgebraId::str() const { return family_letter(family_) + std::to_string(rank_); }

std::string AlgebraId::classical_name() const {
  switch (family_) {
    case Family::A: return "sl(" + std::to_string(rank_ + 1) + ")";
    case Family::B: return "so(" + std::to_string(2 * rank_ + 1) + ")";
    case Family::C: return "sp(" + std::to_string(2 * rank_) + ")";
    case Family::D: return "so(" + std::to_string(2 * rank_) + ")";
    default: return str();
  }
}

std::ostream& operator<<(std::ostream& os, const AlgebraId& id) { return os << id.str(); }

}  // namespace unicas::rootdata
