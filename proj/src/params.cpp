#include "dkap/params.hpp"

#include "dkap/errors.hpp"

namespace dkap {

Params Params::make(const Rat& lambda, const Rat& beta, const Rat& p, const Rat& r) {
  require(lambda < 0, "lambda must be negative, got " + to_string(lambda));
  require(beta > 0, "beta must be positive, got " + to_string(beta));
  require(p > 0 && p < 1, "p must lie in (0, 1), got " + to_string(p));
  require(r > 0, "r must be positive, got " + to_string(r));
  return Params{lambda, beta, p, Rat(1) - p, r};
}

std::string Params::describe() const {
  return "lambda=" + to_string(lambda) + " beta=" + to_string(beta) + " p=" + to_string(p) +
         " r=" + to_string(r);
}

}  // namespace dkap
