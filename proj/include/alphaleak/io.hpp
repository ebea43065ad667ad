// Copyright 2026 The Alphaleak Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <string>

#include "alphaleak/prob.hpp"

namespace alphaleak {

// Matrix ingestion. Two formats, chosen by content: JSON objects of the form
// {"rows": [[...], ...]} and CSV with one comma-separated row of decimal
// probabilities per line. Parsing is locale-independent; every parse or
// validation failure raises ParseError naming the source and the offending
// row or column.
Channel parse_channel_csv(const std::string& text,
                          const std::string& source_name);
Channel parse_channel_json(const std::string& text,
                           const std::string& source_name);

Channel load_channel(const std::filesystem::path& path);
// A distribution file is the single-row special case of a channel file.
Distribution load_distribution(const std::filesystem::path& path);

}  // namespace alphaleak
