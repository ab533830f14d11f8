#include "bredon/builtin.hpp"

#include <cctype>
#include <limits>
#include <optional>

#include "bredon/error.hpp"

namespace bredon {

namespace {

class DescriptorParser
{
public:
    DescriptorParser(std::string text, const std::string& original) : text_(std::move(text)), original_(original) {}

    GroupSpec group()
    {
        expect('C');
        const std::uint64_t order = number();
        expect(':');
        if (order == 1)
            return {2, 0};
        if (order == 0)
            fail("group order must be positive");
        std::uint64_t p = order;
        for (std::uint64_t q = 2; q * q <= order; ++q)
            if (order % q == 0) {
                p = q;
                break;
            }
        unsigned n = 0;
        std::uint64_t rest = order;
        while (rest % p == 0) {
            rest /= p;
            ++n;
        }
        if (rest != 1)
            fail("group order " + std::to_string(order) + " is not a prime power");
        try {
            return {static_cast<unsigned>(p), n};
        } catch (const DomainError& e) {
            fail(e.what());
        }
    }

    GCWComplex parse()
    {
        group_ = group();
        GCWComplex x = expr();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return x;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("builtin \"" + original_ + "\": " + what + " at offset " + std::to_string(pos_));
    }

    bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

    bool accept(const std::string& word)
    {
        if (text_.compare(pos_, word.size(), word) != 0)
            return false;
        pos_ += word.size();
        return true;
    }

    void expect(char c)
    {
        if (!peek(c))
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::uint64_t number()
    {
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a number");
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (v > (std::numeric_limits<std::uint32_t>::max() - 9) / 10)
                fail("number too large");
            v = 10 * v + static_cast<std::uint64_t>(text_[pos_++] - '0');
        }
        return v;
    }

    GCWComplex power(const GCWComplex& x, std::uint64_t k) const
    {
        GCWComplex out = zero_sphere(*group_);
        for (std::uint64_t i = 0; i < k; ++i)
            out = i == 0 ? x : smash(out, x);
        return out;
    }

    GCWComplex expr()
    {
        GCWComplex x = term();
        while (peek('+')) {
            ++pos_;
            x = smash(x, term());
        }
        return x;
    }

    GCWComplex term()
    {
        std::uint64_t count = 1;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            count = number();
            if (peek('*'))
                ++pos_;
        }
        GCWComplex x = factor();
        if (peek('^')) {
            ++pos_;
            x = power(x, number());
        }
        return power(x, count);
    }

    std::vector<GCWComplex> arguments()
    {
        expect('(');
        std::vector<GCWComplex> args{expr()};
        while (peek(',')) {
            ++pos_;
            args.push_back(expr());
        }
        expect(')');
        return args;
    }

    GCWComplex summand_sphere(const Irreducible& v) const
    {
        validate_descriptor(*group_, {{v}});
        return irreducible_sphere(*group_, v);
    }

    GCWComplex factor()
    {
        const GroupSpec& g = *group_;
        if (accept("eps"))
            return summand_sphere({Irreducible::Kind::Trivial});
        if (accept("sigma"))
            return summand_sphere({Irreducible::Kind::Sign});
        if (accept("lambda(")) {
            const std::uint64_t j = number();
            expect(')');
            if (j % g.order() == 0)
                throw DomainError("lambda(" + std::to_string(j) + ") is not a nontrivial rotation of " + g.name());
            return summand_sphere(rotation(g, j));
        }
        if (accept("trivial-sphere(")) {
            const std::uint64_t k = number();
            expect(')');
            return trivial_sphere(g, static_cast<int>(k));
        }
        if (accept("point"))
            return point(g);
        if (accept("S0"))
            return zero_sphere(g);
        if (accept("wedge")) {
            const auto args = arguments();
            GCWComplex x = args.front();
            for (std::size_t i = 1; i < args.size(); ++i)
                x = wedge(x, args[i]);
            return x;
        }
        if (accept("smash")) {
            const auto args = arguments();
            GCWComplex x = args.front();
            for (std::size_t i = 1; i < args.size(); ++i)
                x = smash(x, args[i]);
            return x;
        }
        if (peek('(')) {
            ++pos_;
            GCWComplex x = expr();
            expect(')');
            return x;
        }
        fail("expected a summand");
    }

    std::string text_;
    const std::string& original_;
    std::size_t pos_ = 0;
    std::optional<GroupSpec> group_;
};

} // namespace

GCWComplex parse_builtin(const std::string& descriptor)
{
    std::string compact;
    for (const char c : descriptor)
        if (!std::isspace(static_cast<unsigned char>(c)))
            compact.push_back(c);
    return DescriptorParser(compact, descriptor).parse();
}

const std::vector<std::string>& builtin_corpus()
{
    static const std::vector<std::string> corpus = {
        "C1:trivial-sphere(2)",
        "C2:point",
        "C2:S0",
        "C2:eps",
        "C2:sigma",
        "C2:lambda(1)",
        "C2:2sigma",
        "C2:eps+sigma",
        "C2:trivial-sphere(1)",
        "C2:trivial-sphere(2)",
        "C2:trivial-sphere(3)",
        "C2:wedge(eps, eps^2)",
        "C2:wedge(eps, smash(eps, eps))",
        "C2:wedge(sigma, eps)",
        "C2:wedge(sigma, sigma)",
        "C2:smash(sigma, lambda(1))",
        "C4:eps",
        "C4:sigma",
        "C4:lambda(1)",
        "C4:lambda(2)",
        "C4:lambda(3)",
        "C4:sigma+lambda(1)",
        "C4:eps+lambda(1)",
        "C4:wedge(sigma, lambda(1))",
        "C4:wedge(trivial-sphere(1), lambda(1))",
        "C8:sigma",
        "C8:lambda(1)",
        "C8:lambda(2)",
        "C8:lambda(3)",
        "C8:lambda(4)",
        "C8:sigma+lambda(2)",
        "C3:eps",
        "C3:lambda(1)",
        "C3:lambda(2)",
        "C3:2lambda(1)",
        "C3:wedge(lambda(1), eps)",
        "C9:lambda(1)",
        "C9:lambda(3)",
        "C9:eps+lambda(1)",
        "C9:wedge(lambda(3), trivial-sphere(2))",
    };
    return corpus;
}

} // namespace bredon
