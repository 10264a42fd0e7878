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
#ifndef FAIRMT_IO_H_
#define FAIRMT_IO_H_

#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace fairmt {

absl::StatusOr<std::string> ReadFileToString(const std::filesystem::path& path);

// Writes through a sibling temporary file and renames it into place, so a
// failed write never leaves a truncated artifact behind.
absl::Status WriteFileAtomically(const std::filesystem::path& path,
                                 std::string_view contents);

// Streams into a sibling temporary file; Commit() renames it into place.
// Destroying an uncommitted writer removes the temporary file.
class AtomicFileWriter {
 public:
  explicit AtomicFileWriter(std::filesystem::path path);
  ~AtomicFileWriter();
  AtomicFileWriter(const AtomicFileWriter&) = delete;
  AtomicFileWriter& operator=(const AtomicFileWriter&) = delete;

  absl::Status Open();
  void Write(std::string_view data);
  absl::Status Commit();

 private:
  std::filesystem::path path_;
  std::filesystem::path tmp_;
  std::ofstream out_;
  bool committed_ = false;
};

struct NumberedLine {
  int line = 0;  // 1-based
  std::string_view text;
};

// Non-blank lines with their line numbers; a trailing '\r' is dropped.
std::vector<NumberedLine> SplitLines(std::string_view text);

}  // namespace fairmt

#endif  // FAIRMT_IO_H_
