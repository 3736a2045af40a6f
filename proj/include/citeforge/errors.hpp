#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace citeforge {

// Base for every failure raised by the library. Carries the source line
// (0 when unknown) and, once the driver has seen it, the file name.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message, int line = 0)
      : std::runtime_error(message), line_(line) {}

  int line() const { return line_; }
  const std::string& file() const { return file_; }
  void set_file(std::string file) { file_ = std::move(file); }

  // "file:line: message", omitting whichever location parts are unknown.
  std::string diagnostic() const;

 private:
  int line_;
  std::string file_;
};

enum class ScanErrorCode { UnbalancedGroup, UnterminatedOptional, UnexpectedEnd };

class ScanError : public Error {
 public:
  ScanError(ScanErrorCode code, const std::string& message, int line)
      : Error(message, line), code_(code) {}
  ScanErrorCode code() const { return code_; }

 private:
  ScanErrorCode code_;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class AuxCorruptError : public Error {
 public:
  AuxCorruptError(const std::string& message, std::size_t offset)
      : Error(message + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class StructureError : public Error {
 public:
  using Error::Error;
};

class MacroError : public Error {
 public:
  using Error::Error;
};

class MeasureError : public Error {
 public:
  MeasureError(const std::string& message, char32_t ch) : Error(message), ch_(ch) {}
  char32_t character() const { return ch_; }

 private:
  char32_t ch_;
};

}  // namespace citeforge
