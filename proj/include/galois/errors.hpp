#pragma once

#include <stdexcept>
#include <string>

namespace galois {

class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Universe sizes of the inputs do not line up.
class arity_error : public error {
public:
  explicit arity_error(const std::string& what) : error(what) {}
};

// An exhaustive computation would exceed the configured size cap.
class cap_error : public error {
public:
  explicit cap_error(const std::string& what) : error(what) {}
};

// Input violates a structural invariant (closure axioms, Moore stability,
// qoset reflexivity/transitivity, malformed table).
class validation_error : public error {
public:
  explicit validation_error(const std::string& what) : error(what) {}
};

// A generator was asked for more work than its budget allows.
class budget_error : public error {
public:
  explicit budget_error(const std::string& what) : error(what) {}
};

}  // namespace galois
