#ifndef TTK_ERRORS_HPP
#define TTK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ttk {

// Every error carries a stable machine-readable kind string next to the
// human-readable message; the CLI maps kinds onto its exit-code contract.
class error : public std::runtime_error {
 public:
  error(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Malformed or out-of-domain input (bad gcd, negative r, q < 2, ...).
class invalid_input : public error {
 public:
  explicit invalid_input(const std::string& msg)
      : error("invalid-input", msg) {}
};

// Structurally fine input in a regime the artifact does not realize
// (currently only r > p).
class unsupported_parameter : public error {
 public:
  explicit unsupported_parameter(const std::string& msg)
      : error("unsupported-parameter", msg) {}
};

// A twisting pair that fails validation or whose catching surface has
// chi(Q) >= 0.
class unsupported_pair : public error {
 public:
  explicit unsupported_pair(const std::string& msg)
      : error("unsupported-pair", msg) {}

 protected:
  unsupported_pair(std::string kind, const std::string& msg)
      : error(std::move(kind), msg) {}
};

// Bounded search ran out before finding a witness.  Subtype of
// unsupported_pair so pair-level handlers still catch it; the CLI
// distinguishes it (exit 1, not 2).
class search_exhausted : public unsupported_pair {
 public:
  explicit search_exhausted(const std::string& msg)
      : unsupported_pair("search-exhausted", msg) {}
};

// The requested twist count n does not yet satisfy 1 < r < p < q (or hits a
// gcd failure); min_valid_n carries the smallest usable value found.
class needs_larger_n : public error {
 public:
  needs_larger_n(const std::string& msg, long long min_valid_n)
      : error("needs-larger-n", msg), min_valid_n_(min_valid_n) {}
  long long min_valid_n() const noexcept { return min_valid_n_; }

 private:
  long long min_valid_n_;
};

// poly_div_exact with a nonzero remainder.
class inexact_division : public error {
 public:
  explicit inexact_division(const std::string& msg)
      : error("inexact-division", msg) {}
};

// A consistency condition that can only fail through an implementation bug
// (or a false premise at the given parameters) was violated.
class internal_error : public error {
 public:
  explicit internal_error(const std::string& msg)
      : error("internal-error", msg) {}
};

// A certificate whose hypotheses do not re-verify.  Distinct from
// invalid_input: the document parsed fine but certifies nothing.
class certificate_invalid : public error {
 public:
  explicit certificate_invalid(const std::string& msg)
      : error("certificate-invalid", msg) {}
};

}  // namespace ttk

#endif
