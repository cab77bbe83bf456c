#ifndef TETRALAT_ERROR_HPP
#define TETRALAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tetralat {

enum class Errc {
  NotDivisible,
  PoleAtZero,
  CutoffExceeded,
  NotStabilized,
  KernelDimension,
  NotReduced,
  DegeneratePoint,
  OutOfRange,
  NonTerminating,
  EmptySector,
  Parse,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::PoleAtZero: return "PoleAtZero";
    case Errc::CutoffExceeded: return "CutoffExceeded";
    case Errc::NotStabilized: return "NotStabilized";
    case Errc::KernelDimension: return "KernelDimensionError";
    case Errc::NotReduced: return "NotReduced";
    case Errc::DegeneratePoint: return "DegeneratePoint";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NonTerminating: return "NonTerminating";
    case Errc::EmptySector: return "EmptySector";
    case Errc::Parse: return "ParseError";
    case Errc::Internal: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace tetralat

#endif
