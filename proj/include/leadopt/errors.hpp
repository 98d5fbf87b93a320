//
// Project leadopt - Copyright 2026 The leadopt Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <stdexcept>
#include <string>

namespace leadopt {

/// Base class for all leadopt errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed SMILES input: unbalanced ring closures or parentheses,
/// unknown element, dangling bond, broken bracket atom.
class SyntaxError : public Error {
 public:
  explicit SyntaxError(const std::string& what) : Error("SMILES syntax: " + what) {}
};

/// An atom exceeds the allowed valence set for its element.
class ValenceError : public Error {
 public:
  explicit ValenceError(const std::string& what) : Error("valence: " + what) {}
};

/// Fingerprints of different lengths were combined.
class LengthMismatch : public Error {
 public:
  explicit LengthMismatch(const std::string& what) : Error("length mismatch: " + what) {}
};

/// A score vector lacks a property required by an objective.
class MissingProperty : public Error {
 public:
  explicit MissingProperty(const std::string& name)
      : Error("missing property: " + name) {}
};

/// A property name is not present in the registry.
class UnknownProperty : public Error {
 public:
  explicit UnknownProperty(const std::string& name)
      : Error("unknown property: " + name) {}
};

/// An operation received an empty input it cannot work with.
class EmptyInput : public Error {
 public:
  explicit EmptyInput(const std::string& what) : Error("empty input: " + what) {}
};

/// A template set or lexicon lacks an entry needed for rendering.
class MissingLexiconEntry : public Error {
 public:
  explicit MissingLexiconEntry(const std::string& name)
      : Error("missing lexicon entry: " + name) {}
};

/// Configuration problems: missing files, bad values. CLI exit code 2.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error("config: " + what) {}
};

/// Input data schema violations, reported with line numbers. CLI exit code 3.
class IngestError : public Error {
 public:
  explicit IngestError(const std::string& what) : Error("ingest: " + what) {}
};

/// Generator backend failures. CLI exit code 4. The prompt id of the failing
/// request is carried so interrupted runs can resume.
class BackendError : public Error {
 public:
  enum class Kind { kUnavailable, kAuth, kQuota };

  BackendError(Kind kind, const std::string& what, std::string prompt_id = "")
      : Error("backend: " + what), kind_(kind), prompt_id_(std::move(prompt_id)) {}

  Kind kind() const { return kind_; }
  const std::string& prompt_id() const { return prompt_id_; }

 private:
  Kind kind_;
  std::string prompt_id_;
};

}  // namespace leadopt
