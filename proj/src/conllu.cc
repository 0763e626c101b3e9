#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ged/corpus.h"

namespace ged {
namespace {

constexpr int kColumns = 10;

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

std::optional<int> ParseInt(std::string_view text) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// Accumulates one blank-line-delimited block.
class BlockReader {
 public:
  BlockReader(std::string_view source_name, ConlluParseResult* result)
      : source_name_(source_name), result_(result) {}

  void Comment(std::string_view line) {
    std::string_view body = Trim(line.substr(1));
    constexpr std::string_view kKey = "sent_id";
    if (body.substr(0, kKey.size()) == kKey) {
      std::string_view rest = Trim(body.substr(kKey.size()));
      if (!rest.empty() && rest.front() == '=') {
        sent_id_ = std::string(Trim(rest.substr(1)));
      }
    }
    Touch(0);
  }

  void Row(std::string_view line, int line_no) {
    Touch(line_no);
    if (!error_.empty()) return;
    std::vector<std::string_view> fields = SplitTabs(line);
    if (static_cast<int>(fields.size()) != kColumns) {
      Fail(line_no, "expected 10 tab-separated columns, found " +
                        std::to_string(fields.size()));
      return;
    }
    std::string_view id = fields[0];
    if (id.find('-') != std::string_view::npos ||
        id.find('.') != std::string_view::npos) {
      return;  // multiword range or empty node
    }
    std::optional<int> index = ParseInt(id);
    if (!index) {
      Fail(line_no, "non-integer ID '" + std::string(id) + "'");
      return;
    }
    std::optional<int> head = ParseInt(fields[6]);
    if (!head) {
      Fail(line_no, "non-integer HEAD '" + std::string(fields[6]) + "'");
      return;
    }
    Token token;
    token.index = *index;
    token.form = std::string(fields[1]);
    token.lemma = std::string(fields[2]);
    token.upos = std::string(fields[3]);
    token.head = *head;
    token.deprel = std::string(fields[7]);
    tokens_.push_back(std::move(token));
  }

  void Flush() {
    if (!open_) return;
    ++ordinal_;
    ParsedSentence sentence;
    sentence.id = sent_id_.empty()
                      ? source_name_ + ":" + std::to_string(ordinal_)
                      : sent_id_;
    sentence.source = source_name_;
    sentence.tokens = std::move(tokens_);
    if (error_.empty()) {
      std::vector<std::string> violations = Validate(sentence);
      if (violations.empty()) {
        result_->sentences.push_back(std::move(sentence));
      } else {
        std::string joined;
        for (const std::string& v : violations) {
          if (!joined.empty()) joined += "; ";
          joined += v;
        }
        result_->diagnostics.push_back({sentence.id, first_line_, joined});
      }
    } else {
      result_->diagnostics.push_back({sentence.id, error_line_, error_});
    }
    Reset();
  }

 private:
  void Touch(int line_no) {
    if (!open_) {
      open_ = true;
      first_line_ = line_no;
    }
    if (first_line_ == 0) first_line_ = line_no;
  }

  void Fail(int line_no, std::string message) {
    error_ = std::move(message);
    error_line_ = line_no;
  }

  void Reset() {
    open_ = false;
    first_line_ = 0;
    error_line_ = 0;
    sent_id_.clear();
    error_.clear();
    tokens_.clear();
  }

  std::string source_name_;
  ConlluParseResult* result_;
  bool open_ = false;
  int ordinal_ = 0;
  int first_line_ = 0;
  int error_line_ = 0;
  std::string sent_id_;
  std::string error_;
  std::vector<Token> tokens_;
};

}  // namespace

ConlluParseResult ParseConllu(std::istream& in, std::string_view source_name) {
  ConlluParseResult result;
  BlockReader block(source_name, &result);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) {
      block.Flush();
    } else if (line.front() == '#') {
      block.Comment(line);
    } else {
      block.Row(line, line_no);
    }
  }
  block.Flush();
  return result;
}

ConlluParseResult ParseConlluFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot read " + path);
  return ParseConllu(in, std::filesystem::path(path).filename().string());
}

std::string WriteConllu(const std::vector<ParsedSentence>& sentences) {
  std::ostringstream out;
  for (const ParsedSentence& sentence : sentences) {
    out << "# sent_id = " << sentence.id << '\n';
    for (const Token& t : sentence.tokens) {
      out << t.index << '\t' << t.form << '\t' << t.lemma << '\t' << t.upos
          << "\t_\t_\t" << t.head << '\t' << t.deprel << "\t_\t_\n";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ged
