// Copyright 2026 The wiktmrd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WIKTMRD_ERRORS_H_
#define WIKTMRD_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wiktmrd {

// Base class of every error raised by the library. Parsing stages never
// throw on malformed wikitext; these are reserved for I/O, storage and
// caller contract violations.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownLanguage : public Error {
 public:
  explicit UnknownLanguage(const std::string &key)
      : Error("unknown language: " + key), key_(key) {}
  const std::string &key() const { return key_; }

 private:
  std::string key_;
};

class MalformedRegistryFile : public Error {
 public:
  MalformedRegistryFile(const std::string &path, int line, const std::string &what)
      : Error(path + ":" + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class MalformedDump : public Error {
 public:
  MalformedDump(uint64_t offset, const std::string &what)
      : Error("malformed dump at byte " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  uint64_t offset() const { return offset_; }

 private:
  uint64_t offset_;
};

class StorageFull : public Error {
 public:
  using Error::Error;
};

class CorruptStore : public Error {
 public:
  using Error::Error;
};

class ChecksumMismatch : public Error {
 public:
  using Error::Error;
};

class MalformedRow : public Error {
 public:
  MalformedRow(const std::string &table, int line, const std::string &what)
      : Error(table + ".tsv:" + std::to_string(line) + ": " + what),
        table_(table), line_(line) {}
  const std::string &table() const { return table_; }
  int line() const { return line_; }

 private:
  std::string table_;
  int line_;
};

class MismatchedTables : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

}  // namespace wiktmrd

#endif  // WIKTMRD_ERRORS_H_
