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

#include "test_util.h"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <variant>

#include "fairmt/csv.h"
#include "fairmt/io.h"

namespace fairmt::testing {
namespace {

namespace fs = std::filesystem;

template <typename T>
T OrDie(absl::StatusOr<T> v, const char* what) {
  if (!v.ok()) {
    std::cerr << what << ": " << v.status() << "\n";
    std::abort();
  }
  return *std::move(v);
}

struct Pronouns {
  const char* spp;
  const char* pp;
};
constexpr Pronouns kHe = {"he", "his"};
constexpr Pronouns kShe = {"she", "her"};

constexpr std::array kMaleNames = {"James", "Robert", "Michael", "David",
                                   "Thomas", "Daniel", "Kevin", "George"};
constexpr std::array kFemaleNames = {"Mary", "Linda", "Susan", "Karen",
                                     "Nancy", "Emily", "Laura", "Amy"};
constexpr std::array kSurnames = {"Smith", "Parker", "Brooks", "Hayes",
                                  "Reed", "Walsh", "Moreno", "Hill"};
constexpr std::array kMaleNouns = {"guy", "man", "boy", "actor", "father"};
constexpr std::array kFemaleNouns = {"woman", "girl", "lady", "actress",
                                     "mother"};
constexpr std::array kOccupations = {"doctor",  "teacher", "engineer",
                                     "nurse",   "lawyer",  "architect",
                                     "farmer",  "pilot",   "accountant"};
constexpr std::array kPositive = {"great", "wonderful", "brilliant", "funny",
                                  "charming", "superb"};
constexpr std::array kNegative = {"boring", "awful", "dull", "terrible",
                                  "disappointing", "slow"};
constexpr std::array kNeutral = {"long", "quiet", "loud", "strange", "simple",
                                 "familiar"};

class Generator {
 public:
  explicit Generator(uint32_t seed) : rng_(seed) {}

  size_t Pick(size_t n) { return rng_() % n; }
  template <typename A>
  std::string From(const A& a) {
    return a[Pick(a.size())];
  }
  std::string Adjective(int mood) {
    if (mood > 0) return From(kPositive);
    if (mood < 0) return From(kNegative);
    return From(kNeutral);
  }
  static std::string Article(const std::string& word) {
    return std::string("aeiou").find(word[0]) != std::string::npos ? "an" : "a";
  }
  static std::string Cap(std::string s) {
    s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    return s;
  }

  std::string Document(int kind, int mood) {
    const bool male = Pick(2) == 0;
    const Pronouns& p = male ? kHe : kShe;
    const std::string first =
        male ? From(kMaleNames) : From(kFemaleNames);
    const std::string occ = From(kOccupations);
    const std::string a1 = Adjective(mood);
    const std::string a2 = Adjective(mood);
    switch (kind) {
      case 0:
        return first + " " + From(kSurnames) +
               " carries this film from start to finish. " + Cap(p.spp) +
               " is " + a1 + " and " + p.pp + " scenes are " + a2 + ".";
      case 1:
        return "I watched this on a Sunday. The " +
               (male ? From(kMaleNouns) : From(kFemaleNouns)) +
               " in the first scene was " + a1 + ". Later " + p.spp +
               " made the whole story feel " + a2 + ".";
      case 2:
        return "This is a film about " + Article(occ) + " " + occ +
               " who loses everything. The ending is " + a1 + ".";
      case 3:
        return first + " plays " + Article(occ) + " " + occ + " and " + p.spp +
               " is " + a1 + " in every scene. The script is " + a2 + ".";
      case 4:
        return "The plot was " + a1 + " and the music was " + a2 +
               ". Nothing else stood out.";
      case 5:
        return "The story follows a young " + occ + " in a small town. " +
               first + " is " + a1 + " as the lead, and " + p.spp +
               " never lets the pace drop.";
      case 6:
        return "He is a race car driver. The film is " + a1 + ".";
      default:
        return "My friend said " + first + " was " + a1 +
               " here. I think " + p.spp + " was " + a2 + " too.";
    }
  }

  std::string Noise(std::string text) {
    switch (Pick(5)) {
      case 0:
        return text + "<br /><br />Worth a look &amp; more.";
      case 1:
        return "<p>" + text + "</p>";
      case 2: {
        const size_t dot = text.find(". ");
        if (dot != std::string::npos) text.replace(dot, 2, ".   ");
        return text;
      }
      case 3:
        return text + " It\xE2\x80\x99s \xE2\x80\x9C" "fine\xE2\x80\x9D.";
      default:
        return "  " + text + "\t";
    }
  }

 private:
  std::mt19937 rng_;
};

}  // namespace

fs::path FixtureDir() { return FAIRMT_TEST_FIXTURES; }
fs::path FakeSaBinary() { return FAIRMT_FAKE_SA; }
fs::path CliBinary() { return FAIRMT_CLI; }

const ResourceBundle& DefaultBundle() {
  static const ResourceBundle* bundle = new ResourceBundle(
      OrDie(LoadResources(FAIRMT_DEFAULT_RESOURCES), "default resources"));
  return *bundle;
}

const FigureFixture& Figures() {
  static const FigureFixture* fixture = [] {
    auto* f = new FigureFixture;
    Corpus corpus = OrDie(
        LoadCorpus(FixtureDir() / "figures.jsonl", CorpusFormat::kJsonl),
        "figure corpus");
    for (Document& d : corpus.documents) {
      const std::string id = d.id;
      f->documents.emplace(id, std::move(d));
    }
    AnnotationSet set = OrDie(
        LoadAnnotationFile(FixtureDir() / "figures.annotations.jsonl"),
        "figure annotations");
    for (Annotation& a : set.annotations) {
      const std::string id = a.doc_id;
      f->annotations.emplace(id, std::move(a));
    }
    return f;
  }();
  return *fixture;
}

TempDir::TempDir() {
  std::string pattern = (fs::temp_directory_path() / "fairmt-test-XXXXXX").string();
  if (mkdtemp(pattern.data()) == nullptr) {
    std::perror("mkdtemp");
    std::abort();
  }
  path_ = pattern;
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

std::string SyntheticCorpusCsv(int documents, uint32_t seed, bool noisy) {
  Generator gen(seed);
  std::string out = "id,text,label\n";
  for (int i = 0; i < documents; ++i) {
    const int mood = static_cast<int>(gen.Pick(3)) - 1;
    std::string text = gen.Document(i % 8, mood);
    if (noisy && gen.Pick(2) == 0) text = gen.Noise(std::move(text));
    char id[16];
    std::snprintf(id, sizeof(id), "d%05d", i);
    out += std::string(id) + "," + CsvEscape(text) + "," +
           (mood >= 0 ? "positive" : "negative") + "\n";
  }
  return out;
}

std::vector<Document> SyntheticDocuments(int documents, uint32_t seed,
                                         bool noisy) {
  Corpus corpus =
      OrDie(ParseCorpus(SyntheticCorpusCsv(documents, seed, noisy),
                        CorpusFormat::kCsv, "synthetic"),
            "synthetic corpus");
  return std::move(corpus.documents);
}

std::string FillTemplate(const Template& t,
                         const std::function<std::string(const Slot&)>& fill) {
  std::string out;
  for (const Segment& s : t.segments) {
    if (const auto* lit = std::get_if<Literal>(&s)) {
      out += lit->text;
    } else {
      out += fill(std::get<Slot>(s));
    }
  }
  return out;
}

uint64_t BruteForceBtcCount(const std::vector<Mutant>& mutants,
                            const std::vector<Prediction>& preds) {
  std::map<std::string, SentimentLabel> label;
  for (const Prediction& p : preds) label[p.mutant_id] = p.label;
  uint64_t n = 0;
  for (size_t i = 0; i < mutants.size(); ++i) {
    for (size_t j = i + 1; j < mutants.size(); ++j) {
      const Mutant& a = mutants[i];
      const Mutant& b = mutants[j];
      if (a.template_id == b.template_id &&
          ClassKey(a.class_label) != ClassKey(b.class_label) &&
          label.at(a.id) != label.at(b.id)) {
        ++n;
      }
    }
  }
  return n;
}

TallyCase MakeTallyCase(const std::vector<ClassTally>& tallies, uint32_t seed) {
  TallyCase out;
  for (size_t k = 0; k < tallies.size(); ++k) {
    for (int64_t i = 0; i < tallies[k].positive + tallies[k].negative; ++i) {
      Mutant m;
      m.template_id = "t";
      m.class_label = OccupationClass{"c" + std::to_string(k)};
      m.id = "t/c" + std::to_string(k) + "/" + std::to_string(i);
      out.preds.push_back({m.id, i < tallies[k].positive
                                     ? SentimentLabel::kPositive
                                     : SentimentLabel::kNegative});
      out.mutants.push_back(std::move(m));
    }
  }
  std::mt19937 rng(seed);
  std::shuffle(out.mutants.begin(), out.mutants.end(), rng);
  std::shuffle(out.preds.begin(), out.preds.end(), rng);
  return out;
}

int RunCommand(const std::string& command, std::string* output) {
  std::string cmd = command + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return -1;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    if (output != nullptr) output->append(buf.data(), n);
  }
  const int status = pclose(pipe);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

int UnusedLocalPort() {
  const int fd = socket(AF_INET, SOCK_STREAM, 0);
  if (fd < 0) return -1;
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  socklen_t len = sizeof(addr);
  int port = -1;
  if (bind(fd, reinterpret_cast<sockaddr*>(&addr), len) == 0 &&
      getsockname(fd, reinterpret_cast<sockaddr*>(&addr), &len) == 0) {
    port = ntohs(addr.sin_port);
  }
  close(fd);
  return port;
}

}  // namespace fairmt::testing
