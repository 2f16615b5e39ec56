#include "polydefect/construct.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "polydefect/errors.hpp"
#include "polydefect/report.hpp"

namespace polydefect {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LatticePolytope parse() {
    LatticePolytope p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("construct: " + what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a constructor name");
    return std::string(text_.substr(start, pos_ - start));
  }

  long integer() {
    skip_space();
    long v = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr == first) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  std::string path() {
    skip_space();
    const std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '(') ++depth;
      if (c == ')') {
        if (depth == 0) break;
        --depth;
      }
      ++pos_;
    }
    std::string p(text_.substr(start, pos_ - start));
    while (!p.empty() && std::isspace(static_cast<unsigned char>(p.back()))) p.pop_back();
    if (p.empty()) fail("expected a file path");
    return p;
  }

  std::vector<LatticePolytope> expression_list() {
    std::vector<LatticePolytope> parts{expression()};
    while (accept(',')) parts.push_back(expression());
    return parts;
  }

  LatticePolytope expression() {
    const std::string name = identifier();
    expect('(');
    LatticePolytope result = [&]() -> LatticePolytope {
      if (name == "simplex") {
        const long n = integer();
        if (n < 0 || n > 64) fail("simplex dimension out of range");
        return unit_simplex(static_cast<int>(n));
      }
      if (name == "dilate") {
        const long k = integer();
        expect(',');
        if (k < 1) fail("dilation factor must be at least 1");
        return dilate(expression(), k);
      }
      if (name == "cube") {
        const long n = integer();
        expect(',');
        const long a = integer();
        if (n < 0 || n > 16 || a < 1) fail("cube(n, a) needs 0 <= n <= 16 and a >= 1");
        return cube(static_cast<int>(n), a);
      }
      if (name == "product") {
        auto parts = expression_list();
        if (parts.size() < 2) fail("product needs at least two factors");
        LatticePolytope acc = parts.front();
        for (std::size_t i = 1; i < parts.size(); ++i) acc = product(acc, parts[i]);
        return acc;
      }
      if (name == "pyramid") return pyramid(expression());
      if (name == "cayley") return cayley(expression_list());
      if (name == "file") return read_polytope_file(path());
      fail("unknown constructor '" + name + "'");
    }();
    expect(')');
    return result;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LatticePolytope construct(std::string_view spec) { return Parser(spec).parse(); }

}  // namespace polydefect
