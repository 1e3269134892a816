#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "curvesing/bihom.hpp"
#include "curvesing/unipoly.hpp"

namespace curvesing {

enum class InputMode { Projective, RationalPair };

inline const char* to_string(InputMode m) { return m == InputMode::Projective ? "projective" : "rational-pair"; }

inline InputMode parse_mode(const std::string& s) {
  if (s == "projective") return InputMode::Projective;
  if (s == "rational-pair") return InputMode::RationalPair;
  fail(ErrorKind::Input, "cli", "unknown mode '" + s + "' (expected projective or rational-pair)");
}

/// Sparse polynomial in two variables, keyed by (exponent of first, exponent of second).
using SparsePoly = std::map<std::pair<int, int>, Rat>;

namespace detail {

inline void add_into(SparsePoly& acc, const SparsePoly& x, const Rat& k) {
  for (const auto& [e, c] : x) {
    Rat& slot = acc[e];
    slot += k * c;
    if (slot == 0) acc.erase(e);
  }
}

inline SparsePoly mul(const SparsePoly& x, const SparsePoly& y) {
  SparsePoly out;
  for (const auto& [ex, cx] : x)
    for (const auto& [ey, cy] : y) {
      const std::pair<int, int> e{ex.first + ey.first, ex.second + ey.second};
      Rat& slot = out[e];
      slot += cx * cy;
      if (slot == 0) out.erase(e);
    }
  return out;
}

class ExprParser {
 public:
  ExprParser(std::string text, std::string first, std::optional<std::string> second)
      : text_(std::move(text)), first_(std::move(first)), second_(std::move(second)) {}

  SparsePoly parse() {
    SparsePoly p = expr();
    skip_ws();
    if (pos_ < text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::Input, "cli", "parse error at position " + std::to_string(pos_) + ": " + what + " in '" + text_ + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  SparsePoly expr() {
    SparsePoly acc = term();
    for (;;) {
      if (accept('+')) add_into(acc, term(), Rat(1));
      else if (accept('-')) add_into(acc, term(), Rat(-1));
      else return acc;
    }
  }

  SparsePoly term() {
    SparsePoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = mul(acc, unary());
      } else if (accept('/')) {
        const std::size_t at = pos_;
        const SparsePoly d = unary();
        if (d.size() != 1 || d.begin()->first != std::pair<int, int>{0, 0}) {
          pos_ = at;
          error("division only by a nonzero constant");
        }
        const Rat inv = 1 / d.begin()->second;
        for (auto& [e, c] : acc) c *= inv;
      } else {
        return acc;
      }
    }
  }

  SparsePoly unary() {
    if (accept('-')) {
      SparsePoly p = unary();
      for (auto& [e, c] : p) c = -c;
      return p;
    }
    if (accept('+')) return unary();
    return power();
  }

  SparsePoly power() {
    SparsePoly base = atom();
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) error("expected a nonnegative integer exponent");
    if (pos_ - start > 4) error("exponent too large");
    const int e = std::stoi(text_.substr(start, pos_ - start));
    SparsePoly out{{{0, 0}, Rat(1)}};
    for (int i = 0; i < e; ++i) out = mul(out, base);
    return out;
  }

  SparsePoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) error("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      SparsePoly p = expr();
      if (!accept(')')) error("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Rat r(Int(text_.substr(start, pos_ - start)));
      SparsePoly p;
      if (r != 0) p[{0, 0}] = r;
      return p;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string name = text_.substr(start, pos_ - start);
      if (name == first_) return {{{1, 0}, Rat(1)}};
      if (second_ && name == *second_) return {{{0, 1}, Rat(1)}};
      pos_ = start;
      std::string allowed = first_ + (second_ ? " and " + *second_ : "");
      error("unknown variable '" + name + "' (expected " + allowed + ")");
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string text_;
  std::string first_;
  std::optional<std::string> second_;
  std::size_t pos_ = 0;
};

inline Rat json_rat(const nlohmann::json& x) {
  if (x.is_number_integer()) return Rat(Int(x.dump()));
  if (x.is_string()) return parse_rat(x.get<std::string>());
  fail(ErrorKind::Input, "cli", "coefficient must be an integer or a \"num/den\" string, got " + x.dump());
}

inline std::vector<Rat> json_coeffs(const nlohmann::json& arr) {
  require(arr.is_array() && !arr.empty(), ErrorKind::Input, "cli", "coefficient array must be a nonempty array");
  std::vector<Rat> c;
  for (const auto& x : arr) c.push_back(json_rat(x));
  return c;
}

}  // namespace detail

/// Form in (s, v). Expressions must be homogeneous; arrays list the coefficient
/// of s^i v^(d-i) at index i.
inline BiHomPoly parse_form(const std::string& text) {
  std::string trimmed = text;
  trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
  if (!trimmed.empty() && trimmed.front() == '[') {
    nlohmann::json arr;
    try {
      arr = nlohmann::json::parse(trimmed);
    } catch (const nlohmann::json::parse_error& e) {
      fail(ErrorKind::Input, "cli", std::string("malformed coefficient array: ") + e.what());
    }
    const auto c = detail::json_coeffs(arr);
    return BiHomPoly(static_cast<int>(c.size()) - 1, c);
  }
  const SparsePoly p = detail::ExprParser(text, "s", std::string("v")).parse();
  if (p.empty()) return BiHomPoly::zero(0);
  const int d = p.begin()->first.first + p.begin()->first.second;
  std::vector<Rat> c(static_cast<std::size_t>(d) + 1);
  for (const auto& [e, x] : p) {
    require(e.first + e.second == d, ErrorKind::Input, "cli", "not homogeneous: '" + text + "'");
    c[e.first] = x;
  }
  return BiHomPoly(d, c);
}

inline BiHomPoly parse_form_json(const nlohmann::json& x) {
  if (x.is_string()) return parse_form(x.get<std::string>());
  const auto c = detail::json_coeffs(x);
  return BiHomPoly(static_cast<int>(c.size()) - 1, c);
}

/// Polynomial in t; arrays are ascending in t.
inline UniPoly parse_unipoly(const std::string& text) {
  std::string trimmed = text;
  trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
  if (!trimmed.empty() && trimmed.front() == '[') {
    nlohmann::json arr;
    try {
      arr = nlohmann::json::parse(trimmed);
    } catch (const nlohmann::json::parse_error& e) {
      fail(ErrorKind::Input, "cli", std::string("malformed coefficient array: ") + e.what());
    }
    return UniPoly(detail::json_coeffs(arr));
  }
  const SparsePoly p = detail::ExprParser(text, "t", std::nullopt).parse();
  std::vector<Rat> c;
  for (const auto& [e, x] : p) {
    if (c.size() <= static_cast<std::size_t>(e.first)) c.resize(static_cast<std::size_t>(e.first) + 1);
    c[e.first] = x;
  }
  return UniPoly(std::move(c));
}

inline UniPoly parse_unipoly_json(const nlohmann::json& x) {
  if (x.is_string()) return parse_unipoly(x.get<std::string>());
  return UniPoly(detail::json_coeffs(x));
}

struct InputSpec {
  InputMode mode = InputMode::Projective;
  BiHomPoly a, b, c;        // projective
  UniPoly A, C, B, D;       // rational-pair: (A/C, B/D)
  std::optional<std::uint64_t> seed;
  std::optional<std::set<std::string>> checks;
};

/// JSON object, or lines of the form "key = expr" with '#' comments.
/// Keys: mode, a, b, c, A, C, B, D, seed, checks.
inline InputSpec parse_input(const std::string& text, std::optional<InputMode> forced = std::nullopt) {
  nlohmann::json doc = nlohmann::json::object();
  std::string trimmed = text;
  trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
  if (!trimmed.empty() && trimmed.front() == '{') {
    try {
      doc = nlohmann::json::parse(trimmed);
    } catch (const nlohmann::json::parse_error& e) {
      fail(ErrorKind::Input, "cli", std::string("malformed JSON input: ") + e.what());
    }
  } else {
    std::size_t line_no = 0, start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string::npos) end = text.size();
      std::string line = text.substr(start, end - start);
      start = end + 1;
      ++line_no;
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      const auto eq = line.find('=');
      require(eq != std::string::npos, ErrorKind::Input, "cli", "line " + std::to_string(line_no) + ": expected 'key = value'");
      auto strip = [](std::string s) {
        s.erase(0, s.find_first_not_of(" \t\r"));
        s.erase(s.find_last_not_of(" \t\r") + 1);
        return s;
      };
      const std::string key = strip(line.substr(0, eq)), value = strip(line.substr(eq + 1));
      require(!doc.contains(key), ErrorKind::Input, "cli", "line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
      doc[key] = value;
    }
  }
  require(doc.is_object(), ErrorKind::Input, "cli", "input must be a JSON object or key = value lines");

  static const std::set<std::string> known{"mode", "a", "b", "c", "A", "C", "B", "D", "seed", "checks"};
  for (const auto& [k, v] : doc.items()) require(known.count(k) > 0, ErrorKind::Input, "cli", "unknown input key '" + k + "'");

  InputSpec spec;
  const bool has_proj = doc.contains("a") || doc.contains("b") || doc.contains("c");
  const bool has_pair = doc.contains("A") || doc.contains("B") || doc.contains("C") || doc.contains("D");
  require(!(has_proj && has_pair), ErrorKind::Input, "cli", "input mixes projective (a, b, c) and rational-pair (A, C, B, D) keys");
  if (forced) spec.mode = *forced;
  else if (doc.contains("mode")) spec.mode = parse_mode(doc["mode"].get<std::string>());
  else spec.mode = has_pair ? InputMode::RationalPair : InputMode::Projective;
  if (forced && doc.contains("mode"))
    require(parse_mode(doc["mode"].get<std::string>()) == *forced, ErrorKind::Input, "cli", "--mode disagrees with the input's mode");

  auto need = [&](const char* k) -> const nlohmann::json& {
    require(doc.contains(k), ErrorKind::Input, "cli", std::string("missing key '") + k + "' for " + to_string(spec.mode) + " mode");
    return doc[k];
  };
  if (spec.mode == InputMode::Projective) {
    require(!has_pair, ErrorKind::Input, "cli", "rational-pair keys given in projective mode");
    spec.a = parse_form_json(need("a"));
    spec.b = parse_form_json(need("b"));
    spec.c = parse_form_json(need("c"));
    // Zero forms take the common degree.
    int d = 0;
    for (const auto* f : {&spec.a, &spec.b, &spec.c})
      if (!f->is_zero()) d = std::max(d, f->degree());
    for (auto* f : {&spec.a, &spec.b, &spec.c})
      if (f->is_zero()) *f = BiHomPoly::zero(d);
    require(spec.a.degree() == spec.b.degree() && spec.b.degree() == spec.c.degree(), ErrorKind::Input, "cli",
            "a, b, c have different degrees (" + std::to_string(spec.a.degree()) + ", " + std::to_string(spec.b.degree()) + ", " +
                std::to_string(spec.c.degree()) + ")");
  } else {
    require(!has_proj, ErrorKind::Input, "cli", "projective keys given in rational-pair mode");
    spec.A = parse_unipoly_json(need("A"));
    spec.C = parse_unipoly_json(need("C"));
    spec.B = parse_unipoly_json(need("B"));
    spec.D = parse_unipoly_json(need("D"));
  }
  if (doc.contains("seed")) {
    const auto& s = doc["seed"];
    if (s.is_number_unsigned()) spec.seed = s.get<std::uint64_t>();
    else if (s.is_string()) {
      try {
        spec.seed = std::stoull(s.get<std::string>());
      } catch (const std::exception&) {
        fail(ErrorKind::Input, "cli", "seed must be a nonnegative integer");
      }
    } else {
      fail(ErrorKind::Input, "cli", "seed must be a nonnegative integer");
    }
  }
  if (doc.contains("checks")) {
    std::set<std::string> c;
    const auto& x = doc["checks"];
    if (x.is_array()) {
      for (const auto& e : x) c.insert(e.get<std::string>());
    } else {
      std::string s = x.get<std::string>();
      std::size_t p = 0;
      while (p <= s.size()) {
        std::size_t q = s.find(',', p);
        if (q == std::string::npos) q = s.size();
        std::string item = s.substr(p, q - p);
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (!item.empty()) c.insert(item);
        p = q + 1;
      }
    }
    spec.checks = c;
  }
  return spec;
}

}  // namespace curvesing
