#include "weylres/parse.hpp"

#include <cctype>
#include <charconv>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace weylres {

namespace {

constexpr std::uint64_t max_exponent = std::uint64_t{1} << 16;

template <class T>
struct Semantics {
  std::string context;  // for "<sym> not valid in a <context> expression"
  std::function<T(long long)> integer;
  // Returns nullopt for symbols the context does not accept.
  std::function<std::optional<T>(std::string_view)> symbol;
};

template <class T>
class Parser {
 public:
  Parser(std::string_view text, std::size_t offset, const Semantics<T>& sem) : text_(text), offset_(offset), sem_(sem) {}

  T parse_all() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    T v = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, offset_ + pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  T expr() {
    T v = term();
    for (;;) {
      if (accept('+')) {
        v = v + term();
      } else if (accept('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  T term() {
    T v = factor();
    while (accept('*')) v = v * factor();
    return v;
  }

  T factor() {
    if (accept('-')) return -factor();
    T v = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      const std::uint64_t e = number();
      if (e > max_exponent) {
        pos_ = start;
        fail("exponent too large");
      }
      v = v.pow(e);
    }
    return v;
  }

  std::uint64_t number() {
    skip_space();
    std::uint64_t v = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ptr == first) fail("expected an integer");
    if (ec == std::errc::result_out_of_range) fail("integer out of range");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  T atom() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      T v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      const std::uint64_t v = number();
      if (v > static_cast<std::uint64_t>(std::numeric_limits<long long>::max())) {
        pos_ = start;
        fail("integer out of range");
      }
      return sem_.integer(static_cast<long long>(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      auto v = sem_.symbol(name);
      if (!v) throw parse_error(std::string(name) + " not valid in a " + sem_.context + " expression");
      return *v;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t offset_;
  const Semantics<T>& sem_;
  std::size_t pos_ = 0;
};

template <class T>
T run(std::string_view text, std::size_t offset, const Semantics<T>& sem) {
  return Parser<T>(text, offset, sem).parse_all();
}

// g is only a symbol over a proper extension.
std::optional<FieldElement> generator_symbol(const FieldSpec& f, std::string_view name) {
  if (name != "g") return std::nullopt;
  if (f.is_prime_field()) throw parse_error("g not valid over the prime field p=" + std::to_string(f.p()));
  return FieldElement::generator(f);
}

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int_field(std::string_view v, std::string_view key, std::size_t pos) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || v.empty())
    throw parse_error("expected an integer for " + std::string(key), pos);
  return out;
}

// Splits "(a ; b)" into its two halves with their offsets.
struct PairParts {
  std::string_view first;
  std::size_t first_offset;
  std::string_view second;
  std::size_t second_offset;
};

PairParts split_pair(std::string_view text) {
  std::size_t off = 0;
  const std::string_view s = trim(text, off);
  if (s.empty() || s.front() != '(') throw parse_error("expected '(' to open an image pair", off);
  int depth = 0;
  std::size_t semi = std::string_view::npos;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') {
      if (--depth == 0 && i != s.size() - 1) throw parse_error("unexpected text after image pair", off + i + 1);
      if (depth < 0) throw parse_error("unbalanced ')'", off + i);
    }
    if (s[i] == ';' && depth == 1) {
      if (semi != std::string_view::npos) throw parse_error("image pair has more than two entries", off + i);
      semi = i;
    }
  }
  if (depth != 0) throw parse_error("expected ')' to close an image pair", off + s.size());
  if (semi == std::string_view::npos) throw parse_error("expected ';' in an image pair", off + s.size());
  return {s.substr(1, semi - 1), off + 1, s.substr(semi + 1, s.size() - semi - 2), off + semi + 1};
}

bool looks_like_pair(std::string_view text) {
  std::size_t off = 0;
  const std::string_view s = trim(text, off);
  return !s.empty() && s.front() == '(';
}

}  // namespace

const FieldSpec& parse_field(std::string_view text) {
  std::optional<int> p;
  std::optional<int> n;
  std::optional<std::vector<int>> modulus;
  std::size_t mod_pos = 0;
  std::string_view mod_text;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = text.substr(pos, end - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw parse_error("expected key=value in field spec", pos);
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    const std::size_t vpos = pos + eq + 1;
    if (key == "p" && !p) {
      p = parse_int_field(value, key, vpos);
    } else if (key == "n" && !n) {
      n = parse_int_field(value, key, vpos);
    } else if (key == "mod" && mod_text.empty()) {
      mod_text = value;
      mod_pos = vpos;
      if (mod_text.empty()) throw parse_error("empty modulus", vpos);
    } else {
      throw parse_error("unexpected key '" + std::string(key) + "' in field spec", pos);
    }
    pos = end + 1;
  }
  if (!p) throw parse_error("field spec needs p=<prime>", 0);
  if (*p < 2 || *p > FieldSpec::max_prime || !is_prime(*p))
    throw parse_error("p must be a prime in [2, " + std::to_string(FieldSpec::max_prime) + "]", 2);

  try {
    if (!mod_text.empty()) {
      const FieldSpec& base = FieldSpec::prime(*p);
      Semantics<Poly> sem{"modulus", [&](long long v) { return Poly::from_int(base, v); },
                          [&](std::string_view name) -> std::optional<Poly> {
                            if (name == "g") return Poly::variable(base);
                            return std::nullopt;
                          }};
      const Poly m = run(mod_text, mod_pos, sem);
      if (m.degree() < 1) throw parse_error("modulus must have positive degree", mod_pos);
      std::vector<int> coeffs(static_cast<std::size_t>(m.degree()) + 1, 0);
      for (const auto& [e, c] : m.terms()) coeffs[e] = static_cast<int>(c.index());
      modulus = std::move(coeffs);
      const int deg = static_cast<int>(m.degree());
      if (n && *n != deg) throw parse_error("modulus degree " + std::to_string(deg) + " does not match n", mod_pos);
      n = deg;
    }
    const int degree = n.value_or(1);
    if (degree < 1 || degree > FieldSpec::max_degree)
      throw parse_error("n must be in [1, " + std::to_string(FieldSpec::max_degree) + "]");
    if (modulus) return FieldSpec::get(*p, degree, *modulus);
    return degree == 1 ? FieldSpec::prime(*p) : FieldSpec::extension(*p, degree);
  } catch (const precondition_error& e) {
    throw parse_error(std::string("invalid field: ") + e.what());
  }
}

FieldElement parse_scalar(const FieldSpec& f, std::string_view text, std::size_t offset) {
  Semantics<FieldElement> sem{"field element", [&](long long v) { return FieldElement::from_int(f, v); },
                              [&](std::string_view name) { return generator_symbol(f, name); }};
  return run(text, offset, sem);
}

Poly parse_x_poly(const FieldSpec& f, std::string_view text, std::string_view var, std::size_t offset) {
  const std::string context = var == "x" ? "K[x]" : "K[" + std::string(var) + "]";
  Semantics<Poly> sem{context, [&](long long v) { return Poly::from_int(f, v); },
                      [&](std::string_view name) -> std::optional<Poly> {
                        if (name == var) return Poly::variable(f);
                        if (auto g = generator_symbol(f, name)) return Poly::constant(*g);
                        return std::nullopt;
                      }};
  return run(text, offset, sem);
}

ZPoly parse_z_poly(const FieldSpec& f, std::string_view text, std::size_t offset) {
  Semantics<ZPoly> sem{"K[X,Y]", [&](long long v) { return ZPoly::from_int(f, v); },
                       [&](std::string_view name) -> std::optional<ZPoly> {
                         if (name == "X") return ZPoly::var_x(f);
                         if (name == "Y") return ZPoly::var_y(f);
                         if (auto g = generator_symbol(f, name)) return ZPoly::constant(*g);
                         return std::nullopt;
                       }};
  return run(text, offset, sem);
}

BiPoly<FieldElement> parse_x12_poly(const FieldSpec& f, std::string_view text, std::size_t offset) {
  using B = BiPoly<FieldElement>;
  Semantics<B> sem{"K[x1,x2]", [&](long long v) { return B::from_int(f, v); },
                   [&](std::string_view name) -> std::optional<B> {
                     if (name == "x1") return B::var_x(f);
                     if (name == "x2") return B::var_y(f);
                     if (auto g = generator_symbol(f, name)) return B::constant(*g);
                     return std::nullopt;
                   }};
  return run(text, offset, sem);
}

RingPoly parse_ring_poly(const FieldSpec& f, std::string_view text, std::size_t offset) {
  if (!f.is_prime_field()) throw parse_error("F_p[t] coefficients need a prime field");
  Semantics<RingPoly> sem{"F_p[t][x]", [&](long long v) { return RingPoly::from_int(f, v); },
                          [&](std::string_view name) -> std::optional<RingPoly> {
                            if (name == "x") return RingPoly::variable(f);
                            if (name == "t") return RingPoly::constant(Poly::variable(f));
                            return std::nullopt;
                          }};
  return run(text, offset, sem);
}

Weyl parse_weyl(const FieldSpec& f, std::string_view text, int n, std::size_t offset) {
  Semantics<Weyl> sem{n == 1 ? "A_1" : "A_2", [&](long long v) { return Weyl::from_int(f, v, n); },
                      [&](std::string_view name) -> std::optional<Weyl> {
                        if (n == 1) {
                          if (name == "x") return Weyl::x(f);
                          if (name == "d") return Weyl::d(f);
                        } else {
                          if (name == "x1") return Weyl::x(f, 1, 2);
                          if (name == "x2") return Weyl::x(f, 2, 2);
                          if (name == "d1") return Weyl::d(f, 1, 2);
                          if (name == "d2") return Weyl::d(f, 2, 2);
                        }
                        if (auto g = generator_symbol(f, name)) return Weyl::constant(*g, n);
                        return std::nullopt;
                      }};
  return run(text, offset, sem);
}

AutWord parse_word(Target target, const FieldSpec& f, std::string_view text) {
  AutWord w{target, &f, {}};
  const std::string_view var = target == Target::center ? "X" : "x";
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  // Returns the bracket payload after `name[` and moves past the ']'.
  auto payload = [&](std::size_t name_len, std::size_t& start) {
    start = pos + name_len + 1;
    const std::size_t close = text.find(']', start);
    if (close == std::string_view::npos) throw parse_error("expected ']'", text.size());
    pos = close + 1;
    return text.substr(start, close - start);
  };
  auto at = [&](std::string_view name) {
    return text.substr(pos, name.size()) == name && pos + name.size() < text.size() && text[pos + name.size()] == '[';
  };

  skip();
  if (pos == text.size()) throw parse_error("empty word", pos);
  {
    std::size_t off = 0;
    if (trim(text, off) == "id") return w;
  }
  while (pos < text.size()) {
    std::size_t start = 0;
    if (at("t")) {
      const auto body = payload(1, start);
      w.gens.emplace_back(GenT{parse_scalar(f, body, start)});
    } else if (at("gamma")) {
      const auto body = payload(5, start);
      w.gens.emplace_back(GenGamma{parse_scalar(f, body, start)});
    } else if (at("phi")) {
      const auto body = payload(3, start);
      w.gens.emplace_back(GenPhi{parse_x_poly(f, body, var, start)});
    } else if (at("aff")) {
      const auto body = payload(3, start);
      std::vector<FieldElement> entries;
      std::size_t item = 0;
      while (item <= body.size()) {
        std::size_t end = body.find(',', item);
        if (end == std::string_view::npos) end = body.size();
        entries.push_back(parse_scalar(f, body.substr(item, end - item), start + item));
        item = end + 1;
      }
      if (entries.size() != 6) throw parse_error("aff[...] takes 6 entries a,b,c,d,e,f", start);
      w.gens.emplace_back(
          Affine{{entries[0], entries[1], entries[2], entries[3]}, {entries[4], entries[5]}});
    } else if (text[pos] == 's' && (pos + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[pos + 1])))) {
      w.gens.emplace_back(GenS{});
      ++pos;
    } else {
      throw parse_error("expected a generator s, t[..], gamma[..], phi[..] or aff[..]", pos);
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      throw parse_error("expected whitespace between generators", pos);
    skip();
  }
  try {
    validate(w);
  } catch (const invalid_word_error& e) {
    throw parse_error(e.what());
  }
  return w;
}

CenterAut parse_center_aut(const FieldSpec& f, std::string_view text) {
  const PairParts parts = split_pair(text);
  return {parse_z_poly(f, parts.first, parts.first_offset), parse_z_poly(f, parts.second, parts.second_offset)};
}

WeylAut parse_weyl_aut(const FieldSpec& f, std::string_view text) {
  const PairParts parts = split_pair(text);
  return {parse_weyl(f, parts.first, 1, parts.first_offset), parse_weyl(f, parts.second, 1, parts.second_offset)};
}

CenterAut parse_center_input(const FieldSpec& f, std::string_view text) {
  if (looks_like_pair(text)) return parse_center_aut(f, text);
  return realize_center(parse_word(Target::center, f, text));
}

WeylAut parse_weyl_input(const FieldSpec& f, std::string_view text) {
  if (looks_like_pair(text)) return parse_weyl_aut(f, text);
  return realize_weyl(parse_word(Target::weyl, f, text));
}

std::string ring_poly_text(const RingPoly& f) { return f.to_string("x"); }

}  // namespace weylres
