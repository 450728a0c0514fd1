#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace closcount {

using Element = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input relation contains a directed cycle. `cycle()` lists the nodes in
/// order; the last node has an edge back to the first.
class CycleError : public Error {
 public:
  explicit CycleError(std::vector<Element> cycle);
  const std::vector<Element>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<Element> cycle_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Brute force was requested for a poset above the configured cap.
class TooLarge : public Error {
 public:
  TooLarge(std::size_t size, std::size_t cap);
  std::size_t size() const noexcept { return size_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

class EmptyPoset : public Error {
 public:
  EmptyPoset() : Error("poset is empty") {}
};

class EmptySet : public Error {
 public:
  EmptySet() : Error("element set is empty") {}
};

class NoGreatestElement : public Error {
 public:
  NoGreatestElement() : Error("poset has no greatest element") {}
};

class InvalidOperator : public Error {
 public:
  using Error::Error;
};

class NotIsolated : public Error {
 public:
  NotIsolated() : Error("element set is not an isolated suborder") {}
};

class SameNode : public Error {
 public:
  SameNode() : Error("separator candidate coincides with an endpoint") {}
};

}  // namespace closcount
