#ifndef FERRERS_ERRORS_HPP
#define FERRERS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ferrers {

/// Malformed textual input (partitions, words, rationals).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Input violates a mathematical hypothesis of the requested operation.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Input exceeds an enumeration guard.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Size limits for the brute-force oracles. Every oracle refuses inputs
/// beyond its guard with a sizing message.
struct ResourceGuard {
  int max_vertices = 12;
  int max_boxes = 14;
  int max_perm_degree = 8;   // word length; enumerates S_{length+1}
  int max_colorings = 6;     // largest color count t
};

}  // namespace ferrers

#endif
