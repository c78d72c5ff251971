#pragma once

#include <stdexcept>
#include <string>

namespace twodist {

enum class ErrorKind {
  Parse,
  SizeLimit,
  Undecidable,
  Infeasible,
  CompleteGraph,
  InvalidArgument,
  Geometry,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace twodist
