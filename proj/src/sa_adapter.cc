// Copyright 2026 The fairmt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fairmt/sa_adapter.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cctype>
#include <cerrno>
#include <chrono>
#include <cstring>
#include <iostream>
#include <memory>
#include <thread>
#include <unordered_map>

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

#include "absl/strings/str_cat.h"
#include "fairmt/io.h"
#include "fairmt/utf8.h"
#include "httplib.h"
#include "json.hpp"

namespace fairmt {
namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

absl::StatusOr<std::set<std::string>> WordSet(const json& obj, const char* key) {
  std::set<std::string> out;
  const json& arr = obj[key];
  if (!arr.is_array()) {
    return absl::InvalidArgumentError(
        absl::StrCat("mock config: '", key, "' must be an array of strings"));
  }
  for (const json& w : arr) {
    if (!w.is_string()) {
      return absl::InvalidArgumentError(
          absl::StrCat("mock config: '", key, "' must be an array of strings"));
    }
    out.insert(AsciiLower(w.get<std::string>()));
  }
  return out;
}

// Splits the label-bearing lines of one batch and checks them against the
// request ids.
absl::StatusOr<std::vector<SentimentLabel>> MatchResponses(
    const std::vector<std::string>& ids, const std::vector<std::string>& lines) {
  std::unordered_map<std::string, SentimentLabel> got;
  for (const std::string& line : lines) {
    json obj = json::parse(line, nullptr, false);
    if (obj.is_discarded() || !obj.is_object() || !obj.contains("id") ||
        !obj["id"].is_string() || !obj.contains("label") ||
        !obj["label"].is_string()) {
      return absl::DataLossError(
          absl::StrCat("protocol error: malformed response line: ", line));
    }
    std::optional<SentimentLabel> label =
        ParseLabel(obj["label"].get<std::string>());
    if (!label.has_value()) {
      return absl::DataLossError(absl::StrCat(
          "protocol error: label must be positive or negative: ", line));
    }
    if (!got.emplace(obj["id"].get<std::string>(), *label).second) {
      return absl::DataLossError(
          absl::StrCat("protocol error: duplicate response id: ", line));
    }
  }
  std::vector<SentimentLabel> out;
  out.reserve(ids.size());
  for (const std::string& id : ids) {
    auto it = got.find(id);
    if (it == got.end()) {
      return absl::DataLossError(
          absl::StrCat("protocol error: no response for id '", id, "'"));
    }
    out.push_back(it->second);
  }
  if (got.size() != ids.size()) {
    return absl::DataLossError("protocol error: response has unknown ids");
  }
  return out;
}

// A child process speaking the line protocol.
class Child {
 public:
  static absl::StatusOr<std::unique_ptr<Child>> Spawn(const std::string& command) {
    signal(SIGPIPE, SIG_IGN);
    int in[2], out[2], err[2];
    if (pipe2(in, O_CLOEXEC) != 0 || pipe2(out, O_CLOEXEC) != 0 ||
        pipe2(err, O_CLOEXEC) != 0) {
      return absl::InternalError(absl::StrCat("pipe: ", std::strerror(errno)));
    }
    const pid_t pid = fork();
    if (pid < 0) {
      return absl::InternalError(absl::StrCat("fork: ", std::strerror(errno)));
    }
    if (pid == 0) {
      dup2(in[0], STDIN_FILENO);
      dup2(out[1], STDOUT_FILENO);
      dup2(err[1], STDERR_FILENO);
      execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
      _exit(127);
    }
    close(in[0]);
    close(out[1]);
    close(err[1]);
    auto child = std::unique_ptr<Child>(new Child(pid, in[1], out[0], err[0]));
    for (int fd : {child->in_, child->out_, child->err_}) {
      fcntl(fd, F_SETFL, fcntl(fd, F_GETFL) | O_NONBLOCK);
    }
    return child;
  }

  ~Child() {
    CloseFd(in_);
    CloseFd(out_);
    CloseFd(err_);
    if (pid_ > 0) {
      kill(pid_, SIGKILL);
      waitpid(pid_, nullptr, 0);
    }
  }

  // Writes `request` and collects `n` stdout lines before `deadline`.
  absl::StatusOr<std::vector<std::string>> Exchange(std::string_view request,
                                                    size_t n,
                                                    Clock::time_point deadline) {
    std::vector<std::string> lines;
    size_t written = 0;
    while (lines.size() < n) {
      const auto now = Clock::now();
      if (now >= deadline) return absl::DeadlineExceededError("timed out");
      pollfd fds[3];
      int nfds = 0;
      fds[nfds++] = {out_, POLLIN, 0};
      if (err_ >= 0) fds[nfds++] = {err_, POLLIN, 0};
      const bool writing = written < request.size() && in_ >= 0;
      if (writing) fds[nfds++] = {in_, POLLOUT, 0};
      const int wait_ms = static_cast<int>(
          std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now)
              .count());
      if (poll(fds, nfds, std::max(wait_ms, 1)) < 0) {
        if (errno == EINTR) continue;
        return absl::InternalError(absl::StrCat("poll: ", std::strerror(errno)));
      }
      for (int i = 0; i < nfds; ++i) {
        if (fds[i].revents == 0) continue;
        if (fds[i].fd == in_) {
          const ssize_t k =
              write(in_, request.data() + written, request.size() - written);
          if (k > 0) {
            written += static_cast<size_t>(k);
          } else if (k < 0 && errno != EAGAIN && errno != EINTR) {
            CloseFd(in_);
          }
          continue;
        }
        char buf[65536];
        const ssize_t k = read(fds[i].fd, buf, sizeof(buf));
        if (k < 0 && (errno == EAGAIN || errno == EINTR)) continue;
        if (fds[i].fd == err_) {
          if (k <= 0) {
            CloseFd(err_);
          } else {
            stderr_.append(buf, static_cast<size_t>(k));
          }
          continue;
        }
        if (k <= 0) return Exited(lines.size(), n);
        pending_.append(buf, static_cast<size_t>(k));
        for (size_t nl; (nl = pending_.find('\n')) != std::string::npos;) {
          std::string line = pending_.substr(0, nl);
          pending_.erase(0, nl + 1);
          if (!line.empty() && line.back() == '\r') line.pop_back();
          if (line.find_first_not_of(" \t") == std::string::npos) continue;
          lines.push_back(std::move(line));
        }
      }
    }
    if (lines.size() > n || !pending_.empty()) {
      return absl::DataLossError(
          "protocol error: more response lines than requests");
    }
    return lines;
  }

 private:
  Child(pid_t pid, int in, int out, int err)
      : pid_(pid), in_(in), out_(out), err_(err) {}

  static void CloseFd(int& fd) {
    if (fd >= 0) close(fd);
    fd = -1;
  }

  absl::Status Exited(size_t got, size_t want) {
    // Drain what is left of stderr, then reap.
    if (err_ >= 0) {
      fcntl(err_, F_SETFL, fcntl(err_, F_GETFL) & ~O_NONBLOCK);
      char buf[4096];
      for (ssize_t k; (k = read(err_, buf, sizeof(buf))) > 0;) {
        stderr_.append(buf, static_cast<size_t>(k));
      }
      CloseFd(err_);
    }
    int status = 0;
    waitpid(pid_, &status, 0);
    pid_ = -1;
    const int code = WIFEXITED(status) ? WEXITSTATUS(status)
                                       : 128 + WTERMSIG(status);
    if (code != 0) {
      return absl::UnavailableError(absl::StrCat(
          "adapter exited with status ", code, "; stderr: ", stderr_));
    }
    return absl::DataLossError(absl::StrCat(
        "protocol error: adapter closed stdout after ", got, " of ", want,
        " responses"));
  }

  pid_t pid_;
  int in_;
  int out_;
  int err_;
  std::string pending_;
  std::string stderr_;
};

struct Batch {
  size_t begin = 0;
  size_t end = 0;
};

std::vector<Batch> MakeBatches(size_t n, int batch_size) {
  std::vector<Batch> out;
  for (size_t i = 0; i < n; i += static_cast<size_t>(batch_size)) {
    out.push_back({i, std::min(n, i + static_cast<size_t>(batch_size))});
  }
  return out;
}

absl::Status BatchError(const Batch& b, const absl::Status& s) {
  return absl::Status(s.code(), absl::StrCat("batch [", b.begin, ", ", b.end,
                                             "): ", std::string(s.message())));
}

absl::StatusOr<std::vector<SentimentLabel>> RunSubprocess(
    const SubprocessSpec& spec, const std::vector<std::string>& ids,
    const std::vector<std::string>& texts, PredictStats& stats) {
  std::vector<SentimentLabel> labels;
  labels.reserve(texts.size());
  std::unique_ptr<Child> child;
  for (const Batch& b : MakeBatches(texts.size(), spec.batch_size)) {
    std::string request;
    std::vector<std::string> batch_ids(ids.begin() + b.begin, ids.begin() + b.end);
    for (size_t i = b.begin; i < b.end; ++i) {
      json line = {{"id", ids[i]}, {"text", texts[i]}};
      request += line.dump(-1, ' ', false, json::error_handler_t::replace);
      request += '\n';
    }
    absl::Status last;
    bool done = false;
    for (int attempt = 0; attempt < 2 && !done; ++attempt) {
      if (attempt > 0) ++stats.retries;
      if (child == nullptr) {
        auto spawned = Child::Spawn(spec.command);
        if (!spawned.ok()) return spawned.status();
        child = *std::move(spawned);
      }
      const auto deadline =
          Clock::now() + std::chrono::milliseconds(
                             static_cast<int64_t>(spec.timeout_seconds * 1000));
      auto lines = child->Exchange(request, b.end - b.begin, deadline);
      absl::StatusOr<std::vector<SentimentLabel>> got =
          lines.ok() ? MatchResponses(batch_ids, *lines)
                     : absl::StatusOr<std::vector<SentimentLabel>>(lines.status());
      if (got.ok()) {
        labels.insert(labels.end(), got->begin(), got->end());
        done = true;
      } else {
        last = got.status();
        if (absl::IsDeadlineExceeded(last)) {
          last = absl::DeadlineExceededError(absl::StrCat(
              "timed out after ", spec.timeout_seconds, "s"));
        }
        child.reset();  // a fresh child for the retry
      }
    }
    if (!done) return BatchError(b, last);
  }
  return labels;
}

struct ParsedUrl {
  std::string scheme_host_port;
  std::string path;
};

absl::StatusOr<ParsedUrl> ParseUrl(const std::string& url) {
  if (!url.starts_with("http://")) {
    return absl::InvalidArgumentError(
        absl::StrCat("unsupported URL '", url, "' (expected http://host[:port])"));
  }
  const size_t slash = url.find('/', 7);
  ParsedUrl out;
  out.scheme_host_port = url.substr(0, slash);
  std::string base = slash == std::string::npos ? "" : url.substr(slash);
  while (!base.empty() && base.back() == '/') base.pop_back();
  out.path = base.ends_with("/predict") ? base : base + "/predict";
  if (out.scheme_host_port.size() <= 7) {
    return absl::InvalidArgumentError(absl::StrCat("URL '", url, "' has no host"));
  }
  return out;
}

absl::StatusOr<std::vector<SentimentLabel>> PostBatch(
    const HttpSpec& spec, const ParsedUrl& url,
    const std::vector<std::string>& texts, const Batch& b) {
  httplib::Client client(url.scheme_host_port);
  const auto timeout = std::chrono::milliseconds(
      static_cast<int64_t>(spec.timeout_seconds * 1000));
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);
  json body = {{"texts", json::array()}};
  for (size_t i = b.begin; i < b.end; ++i) body["texts"].push_back(texts[i]);
  auto res = client.Post(
      url.path, body.dump(-1, ' ', false, json::error_handler_t::replace),
      "application/json");
  if (!res) {
    const httplib::Error e = res.error();
    if (e == httplib::Error::Read || e == httplib::Error::Write) {
      return absl::DeadlineExceededError(absl::StrCat(
          "no response within ", spec.timeout_seconds, "s (",
          httplib::to_string(e), ")"));
    }
    return absl::UnavailableError(absl::StrCat(
        "cannot reach ", url.scheme_host_port, ": ", httplib::to_string(e)));
  }
  if (res->status != 200) {
    return absl::UnavailableError(
        absl::StrCat("HTTP ", res->status, ": ", res->body));
  }
  json obj = json::parse(res->body, nullptr, false);
  if (obj.is_discarded() || !obj.is_object() || !obj.contains("labels") ||
      !obj["labels"].is_array()) {
    return absl::DataLossError(
        absl::StrCat("protocol error: malformed response: ", res->body));
  }
  const json& arr = obj["labels"];
  if (arr.size() != b.end - b.begin) {
    return absl::DataLossError(
        absl::StrCat("protocol error: expected ", b.end - b.begin,
                     " labels, got ", arr.size()));
  }
  std::vector<SentimentLabel> out;
  for (const json& l : arr) {
    std::optional<SentimentLabel> label =
        l.is_string() ? ParseLabel(l.get<std::string>()) : std::nullopt;
    if (!label.has_value()) {
      return absl::DataLossError(absl::StrCat(
          "protocol error: label must be positive or negative: ", l.dump()));
    }
    out.push_back(*label);
  }
  return out;
}

absl::StatusOr<std::vector<SentimentLabel>> RunHttp(
    const HttpSpec& spec, const std::vector<std::string>& texts,
    PredictStats& stats) {
  absl::StatusOr<ParsedUrl> url = ParseUrl(spec.url);
  if (!url.ok()) return url.status();
  const std::vector<Batch> batches = MakeBatches(texts.size(), spec.batch_size);
  std::vector<absl::StatusOr<std::vector<SentimentLabel>>> results(
      batches.size(), absl::UnknownError("not run"));
  std::atomic<size_t> next{0};
  std::atomic<int> retries{0};
  auto worker = [&] {
    for (size_t i; (i = next.fetch_add(1)) < batches.size();) {
      results[i] = PostBatch(spec, *url, texts, batches[i]);
      if (!results[i].ok()) {
        ++retries;
        results[i] = PostBatch(spec, *url, texts, batches[i]);
      }
    }
  };
  const size_t workers = std::min<size_t>(
      batches.size(), static_cast<size_t>(std::max(1, spec.max_in_flight)));
  std::vector<std::thread> threads;
  for (size_t i = 0; i < workers; ++i) threads.emplace_back(worker);
  for (std::thread& t : threads) t.join();
  stats.retries += retries.load();

  std::vector<SentimentLabel> labels;
  labels.reserve(texts.size());
  for (size_t i = 0; i < batches.size(); ++i) {
    if (!results[i].ok()) return BatchError(batches[i], results[i].status());
    labels.insert(labels.end(), results[i]->begin(), results[i]->end());
  }
  return labels;
}

std::string Truncate(std::string_view text, size_t max_chars) {
  size_t pos = 0;
  for (size_t n = 0; n < max_chars && pos < text.size(); ++n) DecodeUtf8(text, pos);
  return std::string(text.substr(0, pos));
}

}  // namespace

MockConfig DefaultMockConfig() {
  MockConfig cfg;
  cfg.positive = {"good",      "great",     "excellent", "wonderful", "love",
                  "loved",     "best",      "amazing",   "fun",       "funny",
                  "enjoyed",   "beautiful", "brilliant", "perfect",   "favorite",
                  "superb",    "fantastic", "happy",     "glad",      "excited",
                  "ecstatic",  "relieved",  "believable", "cute",     "nice",
                  "masterpiece", "recommend", "touching", "delightful", "charming"};
  cfg.negative = {"bad",      "worst",     "awful",     "terrible",     "boring",
                  "dull",     "slow",      "waste",     "hated",        "hate",
                  "poor",     "stupid",    "horrible",  "disappointing", "disappointed",
                  "sad",      "angry",     "annoyed",   "enraged",      "furious",
                  "irritated", "anxious",  "scared",    "terrified",    "fearful",
                  "depressed", "devastated", "miserable", "dangerous",  "mess"};
  return cfg;
}

absl::Status ValidateMockConfig(const MockConfig& cfg) {
  for (const std::string& w : cfg.positive) {
    if (cfg.negative.contains(w)) {
      return absl::InvalidArgumentError(
          absl::StrCat("mock config: '", w, "' is in both lexicons"));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<MockConfig> ParseMockConfig(std::string_view json_text) {
  json obj = json::parse(json_text, nullptr, false);
  if (obj.is_discarded() || !obj.is_object()) {
    return absl::InvalidArgumentError("mock config: not a JSON object");
  }
  MockConfig cfg = DefaultMockConfig();
  for (const char* key : {"positive", "negative"}) {
    if (!obj.contains(key)) continue;
    absl::StatusOr<std::set<std::string>> words = WordSet(obj, key);
    if (!words.ok()) return words.status();
    (std::string_view(key) == "positive" ? cfg.positive : cfg.negative) =
        *std::move(words);
  }
  if (obj.contains("bias_rules")) {
    if (!obj["bias_rules"].is_array()) {
      return absl::InvalidArgumentError("mock config: 'bias_rules' must be an array");
    }
    for (const json& r : obj["bias_rules"]) {
      if (!r.is_object() || !r.contains("triggers") || !r.contains("delta") ||
          !r["delta"].is_number_integer()) {
        return absl::InvalidArgumentError(
            "mock config: a bias rule needs 'triggers' and an integer 'delta'");
      }
      absl::StatusOr<std::set<std::string>> triggers = WordSet(r, "triggers");
      if (!triggers.ok()) return triggers.status();
      cfg.bias_rules.push_back({*std::move(triggers), r["delta"].get<int>()});
    }
  }
  if (obj.contains("normalize_protected")) {
    if (!obj["normalize_protected"].is_boolean()) {
      return absl::InvalidArgumentError(
          "mock config: 'normalize_protected' must be a boolean");
    }
    cfg.normalize_protected = obj["normalize_protected"].get<bool>();
  }
  if (absl::Status s = ValidateMockConfig(cfg); !s.ok()) return s;
  return cfg;
}

std::vector<std::string> MockTokens(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    const unsigned char u = static_cast<unsigned char>(c);
    if (std::isalnum(u) || u >= 0x80) {
      cur.push_back(static_cast<char>(std::tolower(u)));
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

namespace {

std::set<std::string> ProtectedWords(const ResourceBundle& bundle) {
  std::set<std::string> words = {"a", "an"};
  for (const std::string& entry : bundle.ProtectedVocabulary()) {
    for (std::string& w : MockTokens(entry)) words.insert(std::move(w));
  }
  return words;
}

SentimentLabel MockClassifyWith(std::string_view text, const MockConfig& cfg,
                                const std::set<std::string>& protected_words) {
  const std::vector<std::string> raw = MockTokens(text);
  int score = 0;
  for (const std::string& t : raw) {
    if (protected_words.contains(t)) continue;
    if (cfg.positive.contains(t)) ++score;
    if (cfg.negative.contains(t)) --score;
  }
  for (const MockBiasRule& rule : cfg.bias_rules) {
    const bool fired = std::any_of(raw.begin(), raw.end(),
                                   [&](const std::string& t) {
                                     return rule.triggers.contains(t);
                                   });
    if (fired) score += rule.delta;
  }
  return score >= 0 ? SentimentLabel::kPositive : SentimentLabel::kNegative;
}

}  // namespace

SentimentLabel MockClassify(std::string_view text, const MockConfig& cfg,
                            const ResourceBundle& bundle) {
  return MockClassifyWith(text, cfg,
                          cfg.normalize_protected ? ProtectedWords(bundle)
                                                  : std::set<std::string>());
}

absl::StatusOr<AdapterSpec> ParseAdapterSpec(std::string_view text) {
  AdapterSpec spec;
  if (text.starts_with("cmd:")) {
    SubprocessSpec s;
    s.command = std::string(text.substr(4));
    spec.kind = s;
  } else if (text.starts_with("http:")) {
    HttpSpec h;
    std::string rest(text.substr(5));
    h.url = rest.starts_with("//") ? "http:" + rest : rest;
    spec.kind = h;
  } else if (text.starts_with("mock")) {
    std::string_view rest = text.substr(4);
    if (!rest.empty() && rest.front() != ':') {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown adapter '", std::string(text), "'"));
    }
    MockSpec m;
    m.config = DefaultMockConfig();
    if (rest.size() > 1) {
      m.config_path = std::string(rest.substr(1));
      absl::StatusOr<std::string> bytes = ReadFileToString(m.config_path);
      if (!bytes.ok()) return bytes.status();
      absl::StatusOr<MockConfig> cfg = ParseMockConfig(*bytes);
      if (!cfg.ok()) return cfg.status();
      m.config = *std::move(cfg);
    }
    spec.kind = std::move(m);
  } else {
    return absl::InvalidArgumentError(absl::StrCat(
        "unknown adapter '", std::string(text),
        "' (expected cmd:..., http:... or mock:...)"));
  }
  if (absl::Status s = ValidateAdapterSpec(spec); !s.ok()) return s;
  return spec;
}

absl::Status ValidateAdapterSpec(const AdapterSpec& spec) {
  if (const auto* s = std::get_if<SubprocessSpec>(&spec.kind)) {
    if (s->command.empty()) return absl::InvalidArgumentError("empty command");
    if (s->batch_size < 1 || s->timeout_seconds <= 0) {
      return absl::InvalidArgumentError("batch_size must be >= 1 and timeout > 0");
    }
  } else if (const auto* h = std::get_if<HttpSpec>(&spec.kind)) {
    if (h->batch_size < 1 || h->timeout_seconds <= 0 || h->max_in_flight < 1) {
      return absl::InvalidArgumentError(
          "batch_size and max_in_flight must be >= 1 and timeout > 0");
    }
    if (absl::StatusOr<ParsedUrl> u = ParseUrl(h->url); !u.ok()) return u.status();
  } else {
    if (absl::Status s = ValidateMockConfig(std::get<MockSpec>(spec.kind).config);
        !s.ok()) {
      return s;
    }
  }
  if (spec.max_chars.has_value() && *spec.max_chars == 0) {
    return absl::InvalidArgumentError("max_chars must be positive");
  }
  return absl::OkStatus();
}

std::string AdapterName(const AdapterSpec& spec) {
  if (const auto* s = std::get_if<SubprocessSpec>(&spec.kind)) {
    return "cmd:" + s->command;
  }
  if (const auto* h = std::get_if<HttpSpec>(&spec.kind)) return "http:" + h->url;
  return "mock";
}

std::string NormalizeNfc(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) return std::string(text);
  const icu::UnicodeString in = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  if (nfc->isNormalized(in, status) && U_SUCCESS(status)) {
    return std::string(text);
  }
  status = U_ZERO_ERROR;
  const icu::UnicodeString out = nfc->normalize(in, status);
  if (U_FAILURE(status)) return std::string(text);
  std::string result;
  out.toUTF8String(result);
  return result;
}

absl::StatusOr<std::vector<Prediction>> PredictBatch(
    const AdapterSpec& spec, const std::vector<Mutant>& mutants,
    const ResourceBundle& bundle, PredictStats* stats) {
  if (absl::Status s = ValidateAdapterSpec(spec); !s.ok()) return s;
  PredictStats local;
  PredictStats& st = stats != nullptr ? *stats : local;

  std::vector<std::string> ids;
  std::vector<std::string> texts;
  ids.reserve(mutants.size());
  texts.reserve(mutants.size());
  for (const Mutant& m : mutants) {
    ids.push_back(m.id);
    std::string text = NormalizeNfc(m.text);
    if (spec.max_chars.has_value() && CodePointCount(text) > *spec.max_chars) {
      text = Truncate(text, *spec.max_chars);
      st.truncated_ids.push_back(m.id);
    }
    texts.push_back(std::move(text));
  }

  absl::StatusOr<std::vector<SentimentLabel>> labels;
  if (const auto* s = std::get_if<SubprocessSpec>(&spec.kind)) {
    labels = RunSubprocess(*s, ids, texts, st);
  } else if (const auto* h = std::get_if<HttpSpec>(&spec.kind)) {
    labels = RunHttp(*h, texts, st);
  } else {
    const MockConfig& cfg = std::get<MockSpec>(spec.kind).config;
    const std::set<std::string> words = cfg.normalize_protected
                                            ? ProtectedWords(bundle)
                                            : std::set<std::string>();
    std::vector<SentimentLabel> out;
    out.reserve(texts.size());
    for (const std::string& t : texts) {
      out.push_back(MockClassifyWith(t, cfg, words));
    }
    labels = std::move(out);
  }
  if (!labels.ok()) return labels.status();

  std::vector<Prediction> preds;
  preds.reserve(mutants.size());
  for (size_t i = 0; i < mutants.size(); ++i) {
    preds.push_back({mutants[i].id, (*labels)[i]});
  }
  return preds;
}

}  // namespace fairmt
