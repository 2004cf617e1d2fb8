#ifndef FORCING_ERRORS_HPP
#define FORCING_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace forcing {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidEdge : public Error {
 public:
  using Error::Error;
};
class InvalidVertex : public Error {
 public:
  using Error::Error;
};
class EmptySet : public Error {
 public:
  using Error::Error;
};
class InvalidParams : public Error {
 public:
  using Error::Error;
};
class TooLarge : public Error {
 public:
  using Error::Error;
};
class NotAMatching : public Error {
 public:
  using Error::Error;
};
class NotSubsetOfMatching : public Error {
 public:
  using Error::Error;
};
class InvalidK : public Error {
 public:
  using Error::Error;
};
class NoPerfectMatching : public Error {
 public:
  using Error::Error;
};
class NotAlternating : public Error {
 public:
  using Error::Error;
};
class DifferentGraphs : public Error {
 public:
  using Error::Error;
};
class NotBipartite : public Error {
 public:
  using Error::Error;
};
class NotRegular : public Error {
 public:
  using Error::Error;
};
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

// A guaranteed combinatorial object (chord, interval-cycle count, composite
// cycle length) was not found. Signals a bug or a skipped precondition that
// did not actually hold; the message names the missing object.
class InternalInvariantViolation : public Error {
 public:
  using Error::Error;
};

// An alternating cycle of half-length >= 3 that was required to have a chord
// has none. Carries the offending cycle.
class NoChord : public Error {
 public:
  NoChord(const std::string& what, std::vector<int> cycle_vertices)
      : Error(what), cycle(std::move(cycle_vertices)) {}
  std::vector<int> cycle;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace forcing

#endif  // FORCING_ERRORS_HPP
