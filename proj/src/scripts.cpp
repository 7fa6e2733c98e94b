#include "casino/scripts.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace casino::scripts {

namespace {

using roulette::Outcome;

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  // Skips whitespace and comments; returns '\0' at end of input.
  char peek() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        if (c == '\n') ++line_;
        ++pos_;
      } else {
        return c;
      }
    }
    return '\0';
  }
  char take() {
    char c = peek();
    if (c != '\0') ++pos_;
    return c;
  }
  // strict: the number must be followed by whitespace, a comment, a bracket or the end.
  int take_number(bool strict = true) {
    peek();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start + (text_[start] == '+'), text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_ ||
        (strict && pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '#' &&
         text_[pos_] != ')' && text_[pos_] != '(')) {
      throw ParseError(line_, "expected an integer");
    }
    return value;
  }
  int line() const { return line_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

void parse_sequence(Cursor& cur, std::vector<Outcome>& out, int depth) {
  while (true) {
    char c = cur.peek();
    if (c == '\0') {
      if (depth > 0) throw ParseError(cur.line(), "unclosed '('");
      return;
    }
    if (c == ')') {
      if (depth == 0) throw ParseError(cur.line(), "unexpected ')'");
      cur.take();
      return;
    }
    std::vector<Outcome> item;
    if (c == '(') {
      cur.take();
      parse_sequence(cur, item, depth + 1);
    } else {
      cur.take();
      switch (std::toupper(static_cast<unsigned char>(c))) {
        case 'W': item.push_back(Outcome::win); break;
        case 'T': item.push_back(Outcome::tie); break;
        case 'L': item.push_back(Outcome::loss); break;
        default: throw ParseError(cur.line(), std::string("unexpected symbol '") + c + "'");
      }
    }
    int repeat = 1;
    if (cur.peek() == '^') {
      cur.take();
      repeat = cur.take_number(false);
      if (repeat < 0) throw ParseError(cur.line(), "negative repeat count");
    }
    for (int i = 0; i < repeat; ++i) out.insert(out.end(), item.begin(), item.end());
  }
}

}  // namespace

std::vector<int> parse_integers(std::string_view text) {
  Cursor cur(text);
  std::vector<int> out;
  while (cur.peek() != '\0') out.push_back(cur.take_number());
  return out;
}

std::vector<Outcome> parse_outcomes(std::string_view text) {
  Cursor cur(text);
  std::vector<Outcome> out;
  parse_sequence(cur, out, 0);
  return out;
}

Script parse_script(std::string_view text) {
  Cursor probe(text);
  char c = probe.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) {
    auto pockets = parse_integers(text);
    for (std::size_t i = 0; i < pockets.size(); ++i) {
      if (pockets[i] < 0 || pockets[i] > 36) {
        Cursor cur(text);
        for (std::size_t j = 0; j < i; ++j) cur.take_number();
        cur.peek();
        throw ParseError(cur.line(), "pocket " + std::to_string(pockets[i]) + " outside 0..36");
      }
    }
    return pockets;
  }
  return parse_outcomes(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace casino::scripts
