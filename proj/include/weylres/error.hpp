#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weylres {

/// Base of every error raised by the library.
class algebra_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different fields, rings or targets.
class mismatch_error : public algebra_error {
 public:
  using algebra_error::algebra_error;
};

class division_by_zero_error : public algebra_error {
 public:
  division_by_zero_error() : algebra_error("division by zero") {}
};

/// An operation was called outside its domain (bad support, index out of
/// range, zero polynomial where a leading term is needed, ...).
class precondition_error : public algebra_error {
 public:
  using algebra_error::algebra_error;
};

class non_central_error : public algebra_error {
 public:
  using algebra_error::algebra_error;
};

/// Malformed generator word: zero payloads, singular or non-SL2 matrices,
/// gamma inside a Weyl-algebra word.
class invalid_word_error : public algebra_error {
 public:
  using algebra_error::algebra_error;
};

/// An endomorphism of K[X,Y] that degree reduction proves is not invertible.
class not_automorphism_error : public algebra_error {
 public:
  using algebra_error::algebra_error;
};

class not_in_gamma_error : public algebra_error {
 public:
  using algebra_error::algebra_error;
};

/// Text input error; `position` is a 0-based byte offset.
class parse_error : public algebra_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : algebra_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  /// Semantic errors (valid syntax, invalid symbol for the context).
  explicit parse_error(const std::string& what)
      : algebra_error(what), position_(std::string::npos) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace weylres
