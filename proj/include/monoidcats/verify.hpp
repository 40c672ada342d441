#ifndef MONOIDCATS_VERIFY_HPP_
#define MONOIDCATS_VERIFY_HPP_

#include <cstdint>
#include <string>

namespace monoidcats::verify {

struct Options {
  std::uint64_t seed = 42;
  std::size_t trials = 200;
};

struct Summary {
  bool pass = true;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string output;  // one line per check, deterministic given the options
};

// Runs the named property suite: "laws", "equivalence", "naturality", or
// "all". Unknown names throw MalformedInput.
Summary run_suite(const std::string& suite, const Options& options);

}  // namespace monoidcats::verify

#endif  // MONOIDCATS_VERIFY_HPP_
