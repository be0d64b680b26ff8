#include "chev/ring_spec.hpp"

#include <cctype>
#include <map>
#include <vector>

#include "chev/ideals.hpp"

namespace chev {

namespace {

class Parser {
  public:
    explicit Parser(const std::string& text) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            unsigned char c = static_cast<unsigned char>(text[i]);
            if (std::isspace(c)) continue;
            chars_.push_back(static_cast<char>(std::tolower(c)));
            pos_.push_back(i);
        }
        end_pos_ = text.size();
    }

    Ring parse() {
        if (chars_.empty()) fail("empty ring specification");
        Ring r = product();
        if (i_ != chars_.size()) fail("unexpected '" + std::string(1, chars_[i_]) + "'");
        return r;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw RingSpecError(msg, i_ < pos_.size() ? pos_[i_] : end_pos_);
    }
    bool at_end() const { return i_ >= chars_.size(); }
    char peek() const { return at_end() ? '\0' : chars_[i_]; }
    bool accept(char c) {
        if (peek() == c) {
            ++i_;
            return true;
        }
        return false;
    }
    bool accept_word(const std::string& w) {
        if (chars_.size() - i_ < w.size()) return false;
        for (std::size_t k = 0; k < w.size(); ++k)
            if (chars_[i_ + k] != w[k]) return false;
        i_ += w.size();
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    std::uint64_t number() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        std::uint64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(chars_[i_++] - '0');
            if (v > (1ull << 40)) fail("number too large");
        }
        return v;
    }

    Ring product() {
        std::vector<Ring> factors{postfix()};
        while (peek() == 'x') {
            ++i_;
            factors.push_back(postfix());
        }
        return make_product(factors);
    }

    Ring postfix() {
        Ring r = atom();
        while (peek() == '[') {
            ++i_;
            std::string var;
            while (std::isalpha(static_cast<unsigned char>(peek()))) var += chars_[i_++];
            if (var.empty()) fail("expected a variable name");
            expect(']');
            expect('/');
            expect('(');
            r = quotient(r, var);
            expect(')');
        }
        return r;
    }

    Ring atom() {
        if (accept('(')) {
            Ring r = product();
            expect(')');
            return r;
        }
        if (accept_word("gf(")) {
            std::size_t at = i_;
            std::uint64_t q = number();
            expect(')');
            try {
                return make_galois_field(q);
            } catch (const RingError& e) {
                i_ = at;
                fail(e.what());
            }
        }
        if (accept_word("loc(")) {
            Ring base = product();
            expect(',');
            std::size_t at = i_;
            bool negative = accept('-');
            std::uint64_t p = number();
            expect(')');
            Elem g = base.from_int(negative ? -static_cast<std::int64_t>(p) : static_cast<std::int64_t>(p));
            Ideal m = ideal_generated(base, {g});
            if (!is_maximal_ideal(base, m)) {
                i_ = at;
                fail("(" + std::to_string(p) + ") is not a maximal ideal of " + base.spec());
            }
            return localize_at(base, m).ring;
        }
        if (accept('z')) {
            expect('/');
            std::size_t at = i_;
            std::uint64_t n = number();
            if (n < 2) {
                i_ = at;
                fail("modulus must be at least 2");
            }
            return make_zmod(n);
        }
        fail("expected a ring (Z/n, GF(q), loc(...), or parenthesized ring)");
    }

    // Monic polynomial in `var` with integer coefficients.
    Ring quotient(const Ring& base, const std::string& var) {
        std::size_t start = i_;
        std::map<unsigned, std::int64_t> coeffs;
        bool first = true;
        while (peek() != ')' && !at_end()) {
            int sign = 1;
            if (accept('-'))
                sign = -1;
            else if (!accept('+') && !first)
                fail("expected '+' or '-'");
            first = false;
            std::int64_t c = 1;
            bool have_number = false;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                c = static_cast<std::int64_t>(number());
                have_number = true;
                accept('*');
            }
            unsigned degree = 0;
            if (accept_word(var)) {
                degree = 1;
                if (accept('^')) degree = static_cast<unsigned>(number());
            } else if (!have_number) {
                fail("expected a term in " + var);
            }
            coeffs[degree] += sign * c;
        }
        std::size_t end = i_;
        while (!coeffs.empty() && coeffs.rbegin()->second == 0) coeffs.erase(std::prev(coeffs.end()));
        if (coeffs.empty() || coeffs.rbegin()->first == 0) {
            i_ = start;
            fail("modulus polynomial must have positive degree");
        }
        if (coeffs.rbegin()->second != 1) {
            i_ = start;
            fail("modulus polynomial must be monic");
        }
        unsigned k = coeffs.rbegin()->first;
        std::vector<Elem> low(k, 0);
        for (auto [d, c] : coeffs)
            if (d < k) low[d] = base.from_int(c);
        i_ = end;
        try {
            return make_poly_quotient(base, low, var);
        } catch (const RingError& e) {
            i_ = start;
            fail(e.what());
        }
    }

    std::vector<char> chars_;
    std::vector<std::size_t> pos_;
    std::size_t end_pos_ = 0;
    std::size_t i_ = 0;
};

}  // namespace

Ring parse_ring(const std::string& spec) { return Parser(spec).parse(); }

}  // namespace chev
