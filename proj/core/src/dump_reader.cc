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

#include "wiktmrd/dump_reader.h"

#include <expat.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>
#include <zlib.h>

#include <cerrno>
#include <cstring>
#include <deque>
#include <fstream>
#include <vector>

#include "wiktmrd/errors.h"
#include "wiktmrd/text_util.h"

namespace wiktmrd {

namespace {

constexpr size_t kChunk = 1 << 16;
constexpr size_t kIdentityPrefix = 1 << 20;

class ByteSource {
 public:
  virtual ~ByteSource() = default;
  // 0 at end of input.
  virtual size_t read(char *buf, size_t n) = 0;
};

class GzSource : public ByteSource {
 public:
  explicit GzSource(const std::filesystem::path &path) {
    file_ = gzopen(path.c_str(), "rb");
    if (file_ == nullptr) throw Error("cannot open dump " + path.string());
    gzbuffer(file_, kChunk);
  }
  ~GzSource() override { gzclose(file_); }

  size_t read(char *buf, size_t n) override {
    int got = gzread(file_, buf, static_cast<unsigned>(n));
    if (got < 0) {
      int err = 0;
      const char *msg = gzerror(file_, &err);
      throw MalformedDump(static_cast<uint64_t>(gzoffset(file_)),
                          std::string("decompression failed: ") + msg);
    }
    return static_cast<size_t>(got);
  }

 private:
  gzFile file_ = nullptr;
};

// Decompresses through a `bzip2 -dc` child process.
class Bzip2Source : public ByteSource {
 public:
  explicit Bzip2Source(const std::filesystem::path &path) {
    int fds[2];
    if (pipe(fds) != 0) throw Error(std::string("pipe: ") + std::strerror(errno));
    pid_ = fork();
    if (pid_ < 0) {
      close(fds[0]);
      close(fds[1]);
      throw Error(std::string("fork: ") + std::strerror(errno));
    }
    if (pid_ == 0) {
      dup2(fds[1], STDOUT_FILENO);
      close(fds[0]);
      close(fds[1]);
      execlp("bzip2", "bzip2", "-dc", path.c_str(), static_cast<char *>(nullptr));
      _exit(127);
    }
    close(fds[1]);
    fd_ = fds[0];
  }

  ~Bzip2Source() override {
    if (fd_ >= 0) close(fd_);
    if (pid_ > 0) {
      kill(pid_, SIGTERM);
      waitpid(pid_, nullptr, 0);
    }
  }

  size_t read(char *buf, size_t n) override {
    for (;;) {
      ssize_t got = ::read(fd_, buf, n);
      if (got > 0) {
        total_ += static_cast<uint64_t>(got);
        return static_cast<size_t>(got);
      }
      if (got < 0 && errno == EINTR) continue;
      if (got < 0) throw Error(std::string("read: ") + std::strerror(errno));
      finish();
      return 0;
    }
  }

 private:
  void finish() {
    if (pid_ <= 0) return;
    int status = 0;
    waitpid(pid_, &status, 0);
    pid_ = 0;
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
      throw MalformedDump(total_, "bzip2 exited with status " + std::to_string(status));
    }
  }

  int fd_ = -1;
  pid_t pid_ = 0;
  uint64_t total_ = 0;
};

std::unique_ptr<ByteSource> open_source(const std::filesystem::path &path) {
  unsigned char magic[3] = {0, 0, 0};
  {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open dump " + path.string());
    in.read(reinterpret_cast<char *>(magic), 3);
  }
  if (magic[0] == 'B' && magic[1] == 'Z' && magic[2] == 'h') {
    return std::make_unique<Bzip2Source>(path);
  }
  // gzread passes uncompressed files through unchanged.
  return std::make_unique<GzSource>(path);
}

enum class Field { kNone, kTitle, kNs, kText };

}  // namespace

std::optional<std::string> redirect_target(std::string_view text) {
  std::string_view t = trim(text);
  static const char *const kMarkers[] = {"#redirect", "#перенаправление"};
  for (const char *marker : kMarkers) {
    std::string_view m = marker;
    if (t.size() < m.size()) continue;
    // The markers are ASCII or Cyrillic, both handled by fold_case.
    if (fold_case(t.substr(0, m.size())) != m) continue;
    std::vector<WikiLink> links = scan_wikilinks(t.substr(m.size()));
    return links.empty() ? std::string() : links.front().target;
  }
  return std::nullopt;
}

struct DumpReader::Impl {
  std::unique_ptr<ByteSource> source;
  XML_Parser parser = nullptr;
  bool eof = false;
  std::deque<Page> ready;
  uint64_t next_record = 0;
  uint64_t filtered = 0;

  // State of the page being read.
  int depth = 0;
  int page_depth = -1;
  Field field = Field::kNone;
  std::string title, ns, text, redirect_attr;
  bool has_redirect = false;

  ~Impl() {
    if (parser != nullptr) XML_ParserFree(parser);
  }

  static void on_start(void *data, const XML_Char *name, const XML_Char **attrs) {
    auto *self = static_cast<Impl *>(data);
    ++self->depth;
    std::string_view n = name;
    if (n == "page") {
      self->page_depth = self->depth;
      self->title.clear();
      self->ns.clear();
      self->text.clear();
      self->redirect_attr.clear();
      self->has_redirect = false;
      return;
    }
    if (self->page_depth < 0) return;
    if (n == "title" && self->depth == self->page_depth + 1) {
      self->field = Field::kTitle;
    } else if (n == "ns" && self->depth == self->page_depth + 1) {
      self->field = Field::kNs;
    } else if (n == "redirect" && self->depth == self->page_depth + 1) {
      self->has_redirect = true;
      for (int i = 0; attrs[i] != nullptr; i += 2) {
        if (std::string_view(attrs[i]) == "title") self->redirect_attr = attrs[i + 1];
      }
    } else if (n == "text" && self->depth == self->page_depth + 2) {
      // A later revision replaces an earlier one.
      self->text.clear();
      self->field = Field::kText;
    }
  }

  static void on_end(void *data, const XML_Char *name) {
    auto *self = static_cast<Impl *>(data);
    std::string_view n = name;
    if (n == "page" && self->depth == self->page_depth) {
      self->finish_page();
      self->page_depth = -1;
    }
    self->field = Field::kNone;
    --self->depth;
  }

  static void on_chars(void *data, const XML_Char *s, int len) {
    auto *self = static_cast<Impl *>(data);
    std::string_view chunk(s, static_cast<size_t>(len));
    switch (self->field) {
      case Field::kTitle: self->title += chunk; break;
      case Field::kNs: self->ns += chunk; break;
      case Field::kText: self->text += chunk; break;
      case Field::kNone: break;
    }
  }

  void finish_page() {
    std::string_view ns_value = trim(ns);
    if (!ns_value.empty() && ns_value != "0") {
      ++filtered;
      return;
    }
    Page page;
    page.title.assign(trim(title));
    page.record_id = next_record++;
    std::optional<std::string> target = redirect_target(text);
    page.is_redirect = has_redirect || target.has_value();
    if (page.is_redirect) {
      page.redirect_target = !redirect_attr.empty() ? redirect_attr : target.value_or("");
    }
    page.raw_text = std::move(text);
    text.clear();
    ready.push_back(std::move(page));
  }

  void fail() {
    throw MalformedDump(static_cast<uint64_t>(XML_GetCurrentByteIndex(parser)),
                        std::string(XML_ErrorString(XML_GetErrorCode(parser))) + " (line " +
                            std::to_string(XML_GetCurrentLineNumber(parser)) + ")");
  }

  void feed() {
    std::vector<char> buf(kChunk);
    size_t got = source->read(buf.data(), buf.size());
    if (got == 0) {
      eof = true;
      if (XML_Parse(parser, nullptr, 0, 1) == XML_STATUS_ERROR) fail();
      return;
    }
    if (XML_Parse(parser, buf.data(), static_cast<int>(got), 0) == XML_STATUS_ERROR) fail();
  }
};

DumpReader::DumpReader(const std::filesystem::path &path) : impl_(std::make_unique<Impl>()) {
  impl_->source = open_source(path);
  impl_->parser = XML_ParserCreate("UTF-8");
  if (impl_->parser == nullptr) throw Error("XML_ParserCreate failed");
  XML_SetUserData(impl_->parser, impl_.get());
  XML_SetElementHandler(impl_->parser, &Impl::on_start, &Impl::on_end);
  XML_SetCharacterDataHandler(impl_->parser, &Impl::on_chars);
}

DumpReader::~DumpReader() = default;

std::optional<Page> DumpReader::next() {
  while (impl_->ready.empty() && !impl_->eof) impl_->feed();
  if (impl_->ready.empty()) return std::nullopt;
  Page page = std::move(impl_->ready.front());
  impl_->ready.pop_front();
  return page;
}

uint64_t DumpReader::namespace_filtered() const { return impl_->filtered; }

std::string dump_identity(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open dump " + path.string());
  std::vector<char> buf(kIdentityPrefix);
  in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
  size_t n = static_cast<size_t>(in.gcount());
  uint64_t h = 0xcbf29ce484222325ULL;
  for (size_t i = 0; i < n; ++i) {
    h ^= static_cast<unsigned char>(buf[i]);
    h *= 0x100000001b3ULL;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + hex + ":" + std::to_string(std::filesystem::file_size(path));
}

}  // namespace wiktmrd
