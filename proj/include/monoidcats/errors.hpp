#ifndef MONOIDCATS_ERRORS_HPP_
#define MONOIDCATS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace monoidcats {

// Base for all domain errors. `code()` is a stable machine-readable tag
// used by the CLI's structured error output.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

struct UnknownLetter : Error {
  explicit UnknownLetter(const std::string& name)
      : Error("UnknownLetter", "unknown letter: " + name) {}
};

struct AlphabetMismatch : Error {
  AlphabetMismatch() : Error("AlphabetMismatch", "words use different alphabets") {}
};

struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& what)
      : Error("IndexOutOfRange", what) {}
};

struct OccurrenceOutOfRange : Error {
  explicit OccurrenceOutOfRange(const std::string& what)
      : Error("OccurrenceOutOfRange", what) {}
};

struct NotEquivalent : Error {
  NotEquivalent() : Error("NotEquivalent", "words are not letter-count equivalent") {}
};

struct SizeMismatch : Error {
  explicit SizeMismatch(const std::string& what) : Error("SizeMismatch", what) {}
};

struct LengthMismatch : Error {
  explicit LengthMismatch(const std::string& what) : Error("LengthMismatch", what) {}
};

struct NotAMorphism : Error {
  NotAMorphism(std::size_t index, const std::string& what)
      : Error("NotAMorphism", what), index(index) {}
  std::size_t index;
};

struct NotComposable : Error {
  explicit NotComposable(const std::string& what) : Error("NotComposable", what) {}
};

struct Overflow : Error {
  explicit Overflow(const std::string& what) : Error("Overflow", what) {}
};

struct CapExceeded : Error {
  explicit CapExceeded(const std::string& what) : Error("CapExceeded", what) {}
};

struct MalformedElement : Error {
  explicit MalformedElement(const std::string& what)
      : Error("MalformedElement", what) {}
};

struct SortMismatch : Error {
  explicit SortMismatch(const std::string& what) : Error("SortMismatch", what) {}
};

struct MalformedCongruence : Error {
  explicit MalformedCongruence(const std::string& what)
      : Error("MalformedCongruence", what) {}
};

struct MalformedCategory : Error {
  explicit MalformedCategory(const std::string& what)
      : Error("MalformedCategory", what) {}
};

struct AxiomsNotVerified : Error {
  explicit AxiomsNotVerified(const std::string& what)
      : Error("AxiomsNotVerified", what) {}
};

struct NotACongruence : Error {
  explicit NotACongruence(const std::string& what)
      : Error("NotACongruence", what) {}
};

struct NotEquivalentEndpoints : Error {
  explicit NotEquivalentEndpoints(const std::string& what)
      : Error("NotEquivalentEndpoints", what) {}
};

struct TooLarge : Error {
  explicit TooLarge(const std::string& what) : Error("TooLarge", what) {}
};

struct MalformedInput : Error {
  explicit MalformedInput(const std::string& what)
      : Error("MalformedInput", what) {}
};

}  // namespace monoidcats

#endif  // MONOIDCATS_ERRORS_HPP_
