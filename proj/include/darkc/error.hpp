#pragma once

#include <stdexcept>
#include <string>

namespace darkc {

/// Bad caller input: out-of-range indices, malformed shapes, violated preconditions.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed (e.g. a non-unique b^{r,s} or a
/// contradictory energy assignment). Always signals a model bug.
class model_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace darkc
