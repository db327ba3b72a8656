#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/constructors.hpp"
#include "ringlab/ideals.hpp"
#include "ringlab/radicals.hpp"

namespace ringlab {

// Preset grammar:
//
//   preset := "zmod:" N
//           | ("mat" | "tri" | "cdtri") ":" K ":" preset
//           | "product:[" preset ("," preset)* "]"
//           | "dorroh:[" preset "]"              V = R acting by multiplication
//           | "dorroh:[zmod:N," preset "]"       V acted on by integer multiples
//           | "quot:[" preset "," ideal "]"
//   ideal  := "delta" | "jacobson" | "socle" | "{" N ("," N)* "}"

namespace detail {

class PresetParser {
 public:
  explicit PresetParser(std::string_view text) : text_(text) {}

  FiniteRing parse_all() {
    FiniteRing R = parse();
    if (pos_ != text_.size()) fail("trailing input");
    return R;
  }

  DorrohData parse_dorroh_all() {
    expect("dorroh:");
    DorrohData d = dorroh_args();
    if (pos_ != text_.size()) fail("trailing input");
    return d;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw UsageError("preset '" + std::string(text_) + "': " + why + " at offset " + std::to_string(pos_));
  }

  bool accept(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  std::size_t number() {
    const std::size_t start = pos_;
    std::size_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (v > (std::size_t{1} << 40)) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return v;
  }

  FiniteRing parse() {
    if (accept("zmod:")) return build_zmod(number());
    if (accept("mat:")) {
      auto k = number();
      expect(":");
      return build_matrix_ring(parse(), k);
    }
    if (accept("tri:")) {
      auto k = number();
      expect(":");
      return build_upper_triangular(parse(), k);
    }
    if (accept("cdtri:")) {
      auto k = number();
      expect(":");
      return build_constant_diagonal_triangular(parse(), k);
    }
    if (accept("product:[")) {
      std::vector<FiniteRing> factors;
      factors.push_back(parse());
      while (accept(",")) factors.push_back(parse());
      expect("]");
      return build_product(factors);
    }
    if (accept("dorroh:")) return build_dorroh(dorroh_args());
    if (accept("quot:[")) {
      FiniteRing R = parse();
      expect(",");
      std::string suffix;
      ElementSet I = ideal(R, suffix);
      expect("]");
      return build_quotient(R, I, R.name() + "/" + suffix).ring;
    }
    fail("unknown constructor");
  }

  DorrohData dorroh_args() {
    expect("[");
    const std::size_t base_start = pos_;
    FiniteRing R = parse();
    const std::string_view base_text = text_.substr(base_start, pos_ - base_start);
    if (accept("]")) return regular_dorroh_data(R);
    expect(",");
    FiniteRing V = parse();
    expect("]");
    if (base_text.substr(0, 5) != "zmod:") fail("a two-argument dorroh preset needs a zmod base");
    return zmod_scalar_dorroh_data(R.order(), V);
  }

  ElementSet ideal(const FiniteRing& R, std::string& suffix) {
    if (accept("delta")) {
      suffix = "delta";
      return delta(R).consensus;
    }
    if (accept("jacobson")) {
      suffix = "J";
      return jacobson(R);
    }
    if (accept("socle")) {
      suffix = "soc";
      return socle(R);
    }
    expect("{");
    ElementSet I(R.order());
    suffix = "{";
    do {
      auto v = number();
      if (v >= R.order()) fail("ideal element out of range");
      I.insert(ElementId(v));
      if (suffix.size() > 1) suffix += ",";
      suffix += std::to_string(v);
    } while (accept(","));
    expect("}");
    suffix += "}";
    return I;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Builds a ring from a preset string such as "tri:2:zmod:3".
inline FiniteRing build_preset(std::string_view preset) { return detail::PresetParser(preset).parse_all(); }

/// The Dorroh input data behind a "dorroh:[...]" preset.
inline DorrohData dorroh_data_from_preset(std::string_view preset) {
  return detail::PresetParser(preset).parse_dorroh_all();
}

}  // namespace ringlab
