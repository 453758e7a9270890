#include "subdivbox/mask.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace subdivbox {

LaurentPoly Mask::submask(const Exponents& e) const {
    const int d = dim();
    if (static_cast<int>(e.size()) != d) throw std::invalid_argument("coset arity mismatch");
    for (int v : e)
        if (v != 0 && v != 1) throw std::invalid_argument("coset entries must be 0 or 1");
    LaurentPoly out(d);
    Exponents alpha(d);
    for (const auto& [ex, c] : symbol_.terms()) {
        bool match = true;
        for (int i = 0; i < d; ++i) {
            int diff = ex[i] - e[i];
            // floor-type parity: diff must be even (Laurent exponents may be negative)
            if (diff % 2 != 0) {
                match = false;
                break;
            }
            alpha[i] = diff / 2;
        }
        if (match) out.add_term(alpha, c);
    }
    return out;
}

InterpolatoryInfo is_interpolatory(const Mask& m) {
    const int d = m.dim();
    InterpolatoryInfo info;
    Exponents e(d, 0);
    while (true) {
        LaurentPoly sub = m.submask(e);
        if (sub.term_count() == 1 && sub.terms().begin()->second == 1) {
            info.interpolatory = true;
            info.e = e;
            info.beta = sub.terms().begin()->first;
            return info;
        }
        int i = 0;
        while (i < d && e[i] == 1) e[i++] = 0;
        if (i == d) break;
        e[i] = 1;
    }
    return info;
}

namespace {

// Minimal exact JSON reader for the interchange format: objects, arrays,
// strings (keys only) and arbitrary-precision integers. Anything else errors.
class JsonCursor {
public:
    explicit JsonCursor(const std::string& text) : s_(text) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        return s_[pos_];
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool try_consume(char c) {
        if (pos_ < s_.size() && peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string parse_string() {
        expect('"');
        std::string out;
        while (pos_ < s_.size() && s_[pos_] != '"') {
            if (s_[pos_] == '\\') fail("escape sequences are not supported");
            out += s_[pos_++];
        }
        if (pos_ >= s_.size()) fail("unterminated string");
        ++pos_;
        return out;
    }

    BigInt parse_integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
        std::size_t digits = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_, ++digits;
        if (digits == 0) fail("expected an integer");
        if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E'))
            fail("coefficients must be integers (use \"denominator\")");
        return BigInt(s_.substr(start, pos_ - start));
    }

    void finish() {
        skip_ws();
        if (pos_ != s_.size()) fail("trailing content after document");
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw MaskFormatError("mask JSON: " + what + " at offset " + std::to_string(pos_));
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

Mask parse_mask_json(const std::string& text) {
    JsonCursor cur(text);
    std::optional<int> dim;
    std::optional<BigInt> denom;
    bool saw_coeffs = false;
    std::vector<std::pair<Exponents, BigInt>> raw;

    cur.expect('{');
    if (!cur.try_consume('}')) {
        do {
            std::string key = cur.parse_string();
            cur.expect(':');
            if (key == "dim") {
                BigInt d = cur.parse_integer();
                if (d < 1 || d > 8) cur.fail("\"dim\" must be in 1..8");
                dim = static_cast<int>(d.get_si());
            } else if (key == "denominator") {
                BigInt d = cur.parse_integer();
                if (d == 0) cur.fail("\"denominator\" must be nonzero");
                denom = d;
            } else if (key == "coeffs") {
                saw_coeffs = true;
                cur.expect('[');
                if (!cur.try_consume(']')) {
                    do {
                        cur.expect('{');
                        std::optional<Exponents> idx;
                        std::optional<BigInt> num;
                        if (!cur.try_consume('}')) {
                            do {
                                std::string k2 = cur.parse_string();
                                cur.expect(':');
                                if (k2 == "idx") {
                                    Exponents e;
                                    cur.expect('[');
                                    if (!cur.try_consume(']')) {
                                        do {
                                            BigInt v = cur.parse_integer();
                                            if (v < -1000000 || v > 1000000) cur.fail("\"idx\" entry out of range");
                                            e.push_back(static_cast<int>(v.get_si()));
                                        } while (cur.try_consume(','));
                                        cur.expect(']');
                                    }
                                    idx = std::move(e);
                                } else if (k2 == "num") {
                                    num = cur.parse_integer();
                                } else {
                                    cur.fail("unknown coefficient key \"" + k2 + "\"");
                                }
                            } while (cur.try_consume(','));
                            cur.expect('}');
                        }
                        if (!idx) cur.fail("coefficient entry missing \"idx\"");
                        if (!num) cur.fail("coefficient entry missing \"num\"");
                        raw.emplace_back(std::move(*idx), std::move(*num));
                    } while (cur.try_consume(','));
                    cur.expect(']');
                }
            } else {
                cur.fail("unknown key \"" + key + "\"");
            }
        } while (cur.try_consume(','));
        cur.expect('}');
    }
    cur.finish();

    if (!dim) throw MaskFormatError("mask JSON: missing \"dim\"");
    if (!denom) throw MaskFormatError("mask JSON: missing \"denominator\"");
    if (!saw_coeffs) throw MaskFormatError("mask JSON: missing \"coeffs\"");

    LaurentPoly p(*dim);
    std::map<Exponents, bool, GradedLexLess> seen;
    for (auto& [e, num] : raw) {
        if (static_cast<int>(e.size()) != *dim)
            throw MaskFormatError("mask JSON: \"idx\" arity " + std::to_string(e.size()) +
                                  " does not match dim " + std::to_string(*dim));
        if (seen.count(e))
            throw MaskFormatError("mask JSON: duplicate idx " + exponent_to_string(e));
        seen[e] = true;
        Rational c(num, *denom);
        c.canonicalize();
        if (c != 0) p.add_term(e, c);
    }
    return Mask(std::move(p));
}

std::string mask_to_json(const Mask& m) {
    // Common denominator = lcm of term denominators; terms in graded-lex order.
    BigInt denom = 1;
    for (const auto& [e, c] : m.symbol().terms())
        mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.get_den().get_mpz_t());
    std::ostringstream os;
    os << "{\"dim\": " << m.dim() << ", \"denominator\": " << denom.get_str() << ", \"coeffs\": [";
    bool first = true;
    for (const auto& [e, c] : m.symbol().terms()) {
        if (!first) os << ", ";
        first = false;
        BigInt num = c.get_num() * (denom / c.get_den());
        os << "{\"idx\": [";
        for (std::size_t i = 0; i < e.size(); ++i) os << (i ? ", " : "") << e[i];
        os << "], \"num\": " << num.get_str() << "}";
    }
    os << "]}";
    return os.str();
}

Mask load_mask_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MaskFormatError("cannot open mask file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_mask_json(ss.str());
}

void save_mask_file(const Mask& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw MaskFormatError("cannot write mask file: " + path);
    out << mask_to_json(m) << "\n";
}

}  // namespace subdivbox
