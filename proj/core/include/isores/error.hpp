#ifndef ISORES_ERROR_HPP
#define ISORES_ERROR_HPP

#include <stdexcept>
#include <string>

namespace isores {

enum class Errc {
  ParseError,
  DegreeMismatch,
  NonPositiveOrder,
  WrongZeroCount,
  IndexOutOfRange,
  ResourceLimit,
  NotInChamber,
  ChamberCrossing,
  NonIntegral,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

const char* errc_name(Errc c);

} // namespace isores

#endif
