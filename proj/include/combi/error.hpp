#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace combi {

enum class ErrorCode {
  parse,
  integrity,
  not_found,
  domain,
  dependency,
  empty_paradigm,
  realization,
  resource,
  frame_incomplete,
};

std::string_view code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Malformed input document. `location` is "line:column" for syntax errors and
// a JSON pointer for structural ones.
class ParseError : public Error {
 public:
  ParseError(std::string location, const std::string& message)
      : Error(ErrorCode::parse, location + ": " + message),
        location_(std::move(location)) {}

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

// A reference to an id that the bundle does not declare.
class IntegrityError : public Error {
 public:
  IntegrityError(std::string missing_id, const std::string& message)
      : Error(ErrorCode::integrity, message), missing_id_(std::move(missing_id)) {}

  const std::string& missing_id() const noexcept { return missing_id_; }

 private:
  std::string missing_id_;
};

class NotFoundError : public Error {
 public:
  explicit NotFoundError(const std::string& message)
      : Error(ErrorCode::not_found, message) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message)
      : Error(ErrorCode::domain, message) {}
};

// A selected slot needs a co-slot that the selection does not cover.
class DependencyError : public Error {
 public:
  DependencyError(int missing_slot, const std::string& message)
      : Error(ErrorCode::dependency, message), missing_slot_(missing_slot) {}

  int missing_slot() const noexcept { return missing_slot_; }

 private:
  int missing_slot_;
};

class EmptyParadigmError : public Error {
 public:
  EmptyParadigmError(int slot, const std::string& message)
      : Error(ErrorCode::empty_paradigm, message), slot_(slot) {}

  int slot() const noexcept { return slot_; }

 private:
  int slot_;
};

class RealizationError : public Error {
 public:
  RealizationError(std::string lemma, std::string form, const std::string& message)
      : Error(ErrorCode::realization, message),
        lemma_(std::move(lemma)),
        form_(std::move(form)) {}

  const std::string& lemma() const noexcept { return lemma_; }
  const std::string& form() const noexcept { return form_; }

 private:
  std::string lemma_;
  std::string form_;
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& message)
      : Error(ErrorCode::resource, message) {}
};

class FrameIncompleteError : public Error {
 public:
  explicit FrameIncompleteError(const std::string& message)
      : Error(ErrorCode::frame_incomplete, message) {}
};

}  // namespace combi
