#pragma once
// Error taxonomy for the toolkit. Invalid inputs raise std::invalid_argument;
// the types below cover the remaining failure classes surfaced through the
// public API (resource caps, byte-level decode failures, file I/O).

#include <stdexcept>
#include <string>

namespace shc {

// An enumeration budget or size cap would be exceeded. Raised instead of
// silently truncating the computation.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// A user could not reconstruct a needed subfile from the schedule.
class decode_failure : public std::runtime_error {
 public:
  decode_failure(int user, const std::string& subfile, const std::string& reason)
      : std::runtime_error("user " + std::to_string(user) + " cannot decode subfile " +
                           subfile + ": " + reason),
        user_(user) {}
  int user() const { return user_; }

 private:
  int user_;
};

// File system failure, annotated with the offending path.
class io_error : public std::runtime_error {
 public:
  io_error(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what) {}
};

}  // namespace shc
