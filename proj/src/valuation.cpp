/*
 * Copyright 2026 the mgsolve authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "mg/valuation.hpp"

#include <algorithm>
#include <stdexcept>

namespace mg {

namespace {

[[noreturn]] void spec_error(const std::string& msg)
{
    throw std::runtime_error("valuation spec: " + msg);
}

} // namespace

ValuationSpec ValuationSpec::parity(int h)
{
    if (h < 1) spec_error("parity needs h >= 1");
    ValuationSpec s(Kind::parity);
    s.h_ = h;
    return s;
}

ValuationSpec ValuationSpec::energy(long long cap)
{
    if (cap < 0) spec_error("energy needs cap >= 0");
    ValuationSpec s(Kind::energy); // cap 0 means: sized when solving
    s.cap_ = cap;
    return s;
}

ValuationSpec ValuationSpec::backward_sup(long long cap)
{
    if (cap < 1) spec_error("backsup needs cap >= 1");
    ValuationSpec s(Kind::backward_sup);
    s.cap_ = cap;
    return s;
}

ValuationSpec ValuationSpec::bounded(long long n)
{
    if (n < 0) spec_error("bounded needs N >= 0");
    ValuationSpec s(Kind::bounded);
    s.cap_ = n;
    return s;
}

ValuationSpec ValuationSpec::prio_cobuchi(int i)
{
    if (i < 1) spec_error("prio_cobuchi needs i >= 1");
    ValuationSpec s(Kind::prio_cobuchi);
    s.h_ = i;
    return s;
}

ValuationSpec ValuationSpec::lex_product(ValuationSpec a, ValuationSpec b)
{
    if (!a.qualitative() || !b.qualitative())
        spec_error("product factors must be objectives (win/lose valued)");
    if (!a.prefix_invariant() || !b.prefix_invariant())
        spec_error("product factors must be prefix-invariant");
    // eps is only neutral for the product when it sits in the first
    // factor: in the second it makes the dominant restriction infinite
    if (b.eps()) spec_error("the second product factor cannot carry eps");
    // disjoint alphabets
    auto ca = a.alphabet(), cb = b.alphabet();
    for (const Color& x : ca)
        if (std::find(cb.begin(), cb.end(), x) != cb.end())
            spec_error("product factors must have disjoint alphabets (" + x.str() + ")");
    ValuationSpec s(Kind::lex_product);
    s.first_ = std::make_shared<const ValuationSpec>(std::move(a));
    s.second_ = std::make_shared<const ValuationSpec>(std::move(b));
    return s;
}

ValuationSpec ValuationSpec::with_eps() const
{
    ValuationSpec s(*this);
    s.eps_ = true;
    return s;
}

bool ValuationSpec::qualitative() const
{
    switch (kind_) {
    case Kind::energy:
    case Kind::backward_sup: return false;
    default: return true;
    }
}

bool ValuationSpec::prefix_invariant() const
{
    switch (kind_) {
    case Kind::buchi:
    case Kind::cobuchi:
    case Kind::parity:
    case Kind::prio_cobuchi: return true;
    case Kind::lex_product: return first_->prefix_invariant() && second_->prefix_invariant();
    default: return false;
    }
}

bool ValuationSpec::prefix_increasing() const
{
    // safety and bounded are prefix-increasing without being invariant;
    // reachability is prefix-decreasing, imm_variant is neither, and the
    // quantitative kinds are neither (a positive prefix can raise the
    // energy of a word, a negative one lower it)
    switch (kind_) {
    case Kind::safety:
    case Kind::bounded: return true;
    default: return prefix_invariant();
    }
}

bool ValuationSpec::counter_based() const
{
    return kind_ == Kind::backward_sup || kind_ == Kind::bounded;
}

bool ValuationSpec::has_closed_alphabet() const
{
    switch (kind_) {
    case Kind::energy:
    case Kind::backward_sup:
    case Kind::bounded: return false;
    case Kind::lex_product:
        return first_->has_closed_alphabet() && second_->has_closed_alphabet();
    default: return true;
    }
}

std::vector<Color> ValuationSpec::alphabet() const
{
    std::vector<Color> cs;
    switch (kind_) {
    case Kind::safety:
    case Kind::cobuchi:
        cs = {Color::symbol(Sym::safe), Color::symbol(Sym::bad)};
        break;
    case Kind::imm_variant:
        cs = {Color::symbol(Sym::imm), Color::symbol(Sym::safe), Color::symbol(Sym::bad)};
        break;
    case Kind::reachability:
    case Kind::buchi:
        cs = {Color::symbol(Sym::wait), Color::symbol(Sym::good)};
        break;
    case Kind::parity:
        for (int p = 2; p <= 2 * h_ + 1; p++) cs.push_back(Color::number(p));
        break;
    case Kind::prio_cobuchi:
        cs = {Color::number(2 * h_), Color::number(2 * h_ + 1)};
        break;
    case Kind::lex_product: {
        cs = first_->alphabet();
        auto more = second_->alphabet();
        cs.insert(cs.end(), more.begin(), more.end());
        break;
    }
    case Kind::energy:
    case Kind::backward_sup:
    case Kind::bounded: break; // open alphabets
    }
    if (eps_) cs.push_back(Color::eps());
    std::sort(cs.begin(), cs.end());
    return cs;
}

bool ValuationSpec::admits(const Color& c) const
{
    if (c.is_eps()) {
        if (eps_) return true;
        if (kind_ == Kind::lex_product)
            return first_->admits(c) || second_->admits(c);
        return false;
    }
    switch (kind_) {
    case Kind::energy: return c.kind() == Color::Kind::number;
    case Kind::backward_sup:
    case Kind::bounded:
        return c.kind() == Color::Kind::map && c.map_mul() >= 0 && c.map_add() >= 0;
    case Kind::lex_product: return first_->admits(c) || second_->admits(c);
    default: {
        auto cs = alphabet();
        return std::find(cs.begin(), cs.end(), c) != cs.end();
    }
    }
}

long long ValuationSpec::map_cap() const
{
    switch (kind_) {
    case Kind::backward_sup: return cap_;
    case Kind::bounded: return cap_ + 1; // one overflow value past the bound
    default: throw std::logic_error("map_cap: not a counter valuation");
    }
}

Value ValuationSpec::top_value() const
{
    return qualitative() ? Value::lose() : Value::infinity();
}

Value ValuationSpec::bottom_value() const
{
    return qualitative() ? Value::win() : Value::number(0);
}

std::string ValuationSpec::str() const
{
    std::string s;
    switch (kind_) {
    case Kind::safety: s = "safety"; break;
    case Kind::imm_variant: s = "immvar"; break;
    case Kind::reachability: s = "reach"; break;
    case Kind::buchi: s = "buchi"; break;
    case Kind::cobuchi: s = "cobuchi"; break;
    case Kind::parity: s = "parity:" + std::to_string(h_); break;
    case Kind::energy:
        s = cap_ > 0 ? "energy:" + std::to_string(cap_) : "energy";
        break;
    case Kind::backward_sup: s = "backsup:" + std::to_string(cap_); break;
    case Kind::bounded: s = "bounded:" + std::to_string(cap_); break;
    case Kind::prio_cobuchi: s = "priocobuchi:" + std::to_string(h_); break;
    case Kind::lex_product:
        s = "product(" + first_->str() + "," + second_->str() + ")";
        break;
    }
    if (eps_) s += "+eps";
    return s;
}

bool ValuationSpec::operator==(const ValuationSpec& o) const
{
    if (kind_ != o.kind_ || eps_ != o.eps_ || h_ != o.h_ || cap_ != o.cap_) return false;
    if (kind_ == Kind::lex_product)
        return *first_ == *o.first_ && *second_ == *o.second_;
    return true;
}

namespace {

// recursive-descent over the spec grammar
struct SpecParser {
    const std::string& text;
    size_t pos = 0;

    explicit SpecParser(const std::string& t) : text(t) {}

    char peek() const { return pos < text.size() ? text[pos] : '\0'; }
    bool eat(char c)
    {
        if (peek() != c) return false;
        pos++;
        return true;
    }

    std::string word()
    {
        size_t start = pos;
        while (pos < text.size() && (isalnum((unsigned char)text[pos]) || text[pos] == '_'))
            pos++;
        return text.substr(start, pos - start);
    }

    long long integer()
    {
        size_t start = pos;
        if (peek() == '-') pos++;
        while (pos < text.size() && isdigit((unsigned char)text[pos])) pos++;
        if (pos == start) spec_error("expected integer at '" + text.substr(start) + "'");
        return std::stoll(text.substr(start, pos - start));
    }

    ValuationSpec spec()
    {
        ValuationSpec s = base();
        if (peek() == '+') {
            pos++;
            if (word() != "eps") spec_error("expected 'eps' after '+'");
            s = s.with_eps();
        }
        return s;
    }

    ValuationSpec base()
    {
        std::string w = word();
        if (w == "safety") return ValuationSpec::safety();
        if (w == "immvar") return ValuationSpec::imm_variant();
        if (w == "reach") return ValuationSpec::reachability();
        if (w == "buchi") return ValuationSpec::buchi();
        if (w == "cobuchi") return ValuationSpec::cobuchi();
        if (w == "parity") return ValuationSpec::parity((int)param());
        if (w == "energy")
            return ValuationSpec::energy(peek() == ':' ? param() : 0);
        if (w == "backsup") return ValuationSpec::backward_sup(param());
        if (w == "bounded") return ValuationSpec::bounded(param());
        if (w == "priocobuchi") return ValuationSpec::prio_cobuchi((int)param());
        if (w == "product") {
            if (!eat('(')) spec_error("expected '(' after product");
            ValuationSpec a = spec();
            if (!eat(',')) spec_error("expected ',' in product");
            ValuationSpec b = spec();
            if (!eat(')')) spec_error("expected ')' after product");
            return ValuationSpec::lex_product(std::move(a), std::move(b));
        }
        spec_error("unknown valuation '" + w + "'");
    }

    long long param()
    {
        if (!eat(':')) spec_error("expected ':' before parameter");
        return integer();
    }
};

} // namespace

ValuationSpec ValuationSpec::parse(const std::string& text)
{
    SpecParser p(text);
    ValuationSpec s = p.spec();
    if (p.pos != text.size())
        spec_error("trailing characters '" + text.substr(p.pos) + "'");
    return s;
}

Lasso::Lasso(std::vector<Color> u, std::vector<Color> v)
    : stem(std::move(u)), cycle(std::move(v))
{
    if (cycle.empty()) throw std::invalid_argument("Lasso: empty cycle");
}

} // namespace mg
