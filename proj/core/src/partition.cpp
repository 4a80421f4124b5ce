#include "ferrers/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "ferrers/errors.hpp"

namespace ferrers {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) {
    throw ParseError("partition must have at least one part");
  }
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw ParseError("partition part " + std::to_string(i) +
                       " is not positive: " + std::to_string(parts_[i]));
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw ParseError("partition is not weakly decreasing at index " +
                       std::to_string(i));
    }
  }
}

Partition Partition::parse(std::string_view text) {
  if (text.empty()) {
    throw ParseError("empty partition text");
  }
  std::vector<int> parts;
  std::size_t pos = 0;
  std::size_t index = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError("partition token " + std::to_string(index) +
                       " is not an integer: '" + std::string(token) + "'");
    }
    parts.push_back(value);
    ++index;
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

long long Partition::boxes() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition Partition::conjugate() const {
  std::vector<int> dual(cols(), 0);
  for (int part : parts_) {
    for (int j = 0; j < part; ++j) ++dual[j];
  }
  return Partition(std::move(dual));
}

std::string Partition::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out << ',';
    out << parts_[i];
  }
  return out.str();
}

ABWord ABWord::parse(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'a' && text[i] != 'b') {
      throw ParseError("word letter " + std::to_string(i) +
                       " is not 'a' or 'b': '" + std::string(1, text[i]) +
                       "'");
    }
  }
  return ABWord(std::string(text));
}

int ABWord::b_count() const {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), 'b'));
}

int ABWord::a_count() const {
  return length() - b_count();
}

std::vector<int> ABWord::run_counts() const {
  std::vector<int> runs{0};
  for (char c : letters_) {
    if (c == 'b') {
      runs.push_back(0);
    } else {
      ++runs.back();
    }
  }
  return runs;
}

Partition ABWord::to_partition() const {
  const std::vector<int> runs = run_counts();
  const int m = b_count();
  std::vector<int> parts;
  for (int len = m + 1; len >= 1; --len) {
    const int count = (len == m + 1) ? runs[m] + 1 : runs[len - 1];
    parts.insert(parts.end(), count, len);
  }
  return Partition(std::move(parts));
}

ABWord ABWord::from_partition(const Partition& p) {
  const int m = p.cols() - 1;
  std::vector<int> count_by_length(m + 2, 0);
  for (int part : p.parts()) ++count_by_length[part];
  std::string letters;
  for (int i = 0; i <= m; ++i) {
    const int run = (i == m) ? count_by_length[m + 1] - 1
                             : count_by_length[i + 1];
    letters.append(run, 'a');
    if (i < m) letters.push_back('b');
  }
  return ABWord(std::move(letters));
}

FerrersGraph::FerrersGraph(Partition p) : partition_(std::move(p)) {}

}  // namespace ferrers
