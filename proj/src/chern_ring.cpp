#include "hkrr/chern_ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hkrr/series.hpp"

namespace hkrr {

RingSpec RingSpec::hyperkahler(int dim) {
    if (dim < 2 || dim % 2 != 0) throw std::invalid_argument("hyperkahler dimension must be even and positive");
    return {dim, true};
}

RingSpec RingSpec::generic(int dim) {
    if (dim < 1) throw std::invalid_argument("dimension must be positive");
    return {dim, false};
}

bool RingSpec::has_generator(int w) const {
    return w >= 1 && w <= dim && (!hk_mode || w % 2 == 0);
}

std::vector<int> RingSpec::generators() const {
    std::vector<int> g;
    for (int w = 1; w <= dim; ++w) {
        if (has_generator(w)) g.push_back(w);
    }
    return g;
}

int weight(const Monomial& m) {
    int w = 0;
    for (int g : m) w += g;
    return w;
}

std::string monomial_name(const Monomial& m) {
    if (m.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < m.size();) {
        std::size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        if (i != 0) os << "*";
        os << "c" << m[i];
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

Monomial parse_monomial(const std::string& name) {
    if (name == "1") return {};
    Monomial m;
    std::istringstream is(name);
    std::string factor;
    while (std::getline(is, factor, '*')) {
        int gen = 0;
        int exp = 1;
        char c = 0;
        std::istringstream fs(factor);
        if (!(fs >> c) || c != 'c' || !(fs >> gen) || gen < 1) {
            throw std::invalid_argument("malformed monomial: '" + name + "'");
        }
        if (fs >> c) {
            if (c != '^' || !(fs >> exp) || exp < 1 || !fs.eof()) {
                throw std::invalid_argument("malformed monomial: '" + name + "'");
            }
        }
        m.insert(m.end(), static_cast<std::size_t>(exp), gen);
    }
    std::sort(m.begin(), m.end());
    return m;
}

namespace {

void partitions_into(const std::vector<int>& parts, std::size_t from, int remaining, Monomial& cur,
                     std::vector<Monomial>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < parts.size() && parts[i] <= remaining; ++i) {
        cur.push_back(parts[i]);
        partitions_into(parts, i, remaining - parts[i], cur, out);
        cur.pop_back();
    }
}

Monomial merge(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
    return m;
}

}  // namespace

std::vector<Monomial> monomials_of_weight(const RingSpec& spec, int w) {
    std::vector<Monomial> out;
    if (w < 0 || w > spec.dim) return out;
    Monomial cur;
    partitions_into(spec.generators(), 0, w, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Monomial> top_monomials(const RingSpec& spec) { return monomials_of_weight(spec, spec.dim); }

SpecMismatchError::SpecMismatchError() : std::invalid_argument("operands live in different Chern rings") {}

// ---- GradedClass ----

GradedClass::GradedClass(RingSpec spec) : spec_(spec) {}

GradedClass GradedClass::constant(const RingSpec& spec, const Rational& c) {
    GradedClass g(spec);
    g.add_term({}, c);
    return g;
}

GradedClass GradedClass::chern(const RingSpec& spec, int j) {
    if (j < 0) throw std::invalid_argument("negative Chern class index");
    if (j == 0) return constant(spec, 1);
    GradedClass g(spec);
    if (spec.has_generator(j)) g.add_term({j}, 1);
    return g;
}

GradedClass GradedClass::from_monomial(const RingSpec& spec, const Monomial& m, const Rational& c) {
    for (int gen : m) {
        if (!spec.has_generator(gen)) throw std::invalid_argument("monomial uses a generator absent from the ring");
    }
    GradedClass g(spec);
    Monomial sorted = m;
    std::sort(sorted.begin(), sorted.end());
    if (weight(sorted) <= spec.dim) g.add_term(sorted, c);
    return g;
}

void GradedClass::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational GradedClass::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

GradedClass GradedClass::component(int w) const {
    GradedClass g(spec_);
    for (const auto& [m, c] : terms_) {
        if (weight(m) == w) g.terms_.emplace(m, c);
    }
    return g;
}

GradedClass GradedClass::operator-() const {
    GradedClass g = *this;
    for (auto& [m, c] : g.terms_) c = -c;
    return g;
}

GradedClass& GradedClass::operator+=(const GradedClass& o) {
    if (spec_ != o.spec_) throw SpecMismatchError();
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& o) { return *this += -o; }

GradedClass& GradedClass::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

GradedClass operator*(const GradedClass& a, const GradedClass& b) {
    if (a.spec_ != b.spec_) throw SpecMismatchError();
    GradedClass out(a.spec_);
    for (const auto& [ma, ca] : a.terms_) {
        int wa = weight(ma);
        for (const auto& [mb, cb] : b.terms_) {
            if (wa + weight(mb) > a.spec_.dim) continue;
            out.add_term(merge(ma, mb), ca * cb);
        }
    }
    return out;
}

GradedClass& GradedClass::operator*=(const GradedClass& o) { return *this = *this * o; }

std::string GradedClass::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational mag = c.abs();
        if (m.empty()) {
            os << mag;
        } else {
            if (mag != Rational(1)) os << mag << "*";
            os << monomial_name(m);
        }
    }
    return os.str();
}

GradedClass exp_class(const GradedClass& a) {
    if (!a.constant_term().is_zero()) throw std::invalid_argument("exp_class: class has a nonzero constant part");
    GradedClass sum = GradedClass::constant(a.spec(), 1);
    GradedClass term = sum;
    for (int m = 1; m <= a.spec().dim; ++m) {
        term = term * a * Rational(1, m);
        if (term.is_zero()) break;
        sum += term;
    }
    return sum;
}

GradedClass substitute(const GradedClass& a, std::span<const GradedClass> images) {
    GradedClass out(a.spec());
    for (const auto& [m, c] : a.terms()) {
        GradedClass prod = GradedClass::constant(a.spec(), c);
        for (int gen : m) {
            if (static_cast<std::size_t>(gen) >= images.size()) {
                throw std::invalid_argument("substitute: no image for generator c" + std::to_string(gen));
            }
            prod *= images[static_cast<std::size_t>(gen)];
        }
        out += prod;
    }
    return out;
}

std::vector<GradedClass> chern_to_powersums(const RingSpec& spec) {
    // p_k = sum_{i=1}^{k-1} (-1)^{i-1} c_i p_{k-i} + (-1)^{k-1} k c_k
    std::vector<GradedClass> p;
    p.push_back(GradedClass::constant(spec, spec.dim));
    for (int k = 1; k <= spec.dim; ++k) {
        GradedClass pk = GradedClass::chern(spec, k) * Rational(k % 2 == 1 ? k : -k);
        for (int i = 1; i < k; ++i) {
            GradedClass t = GradedClass::chern(spec, i) * p[static_cast<std::size_t>(k - i)];
            if (i % 2 == 1) pk += t;
            else pk -= t;
        }
        p.push_back(std::move(pk));
    }
    return p;
}

std::vector<GradedClass> powersums_to_chern(const RingSpec& spec) {
    // k c_k = sum_{i=1}^{k} (-1)^{i-1} c_{k-i} p_i, generators read as p_i
    std::vector<GradedClass> c;
    c.push_back(GradedClass::constant(spec, 1));
    for (int k = 1; k <= spec.dim; ++k) {
        GradedClass ck(spec);
        for (int i = 1; i <= k; ++i) {
            GradedClass t = c[static_cast<std::size_t>(k - i)] * GradedClass::chern(spec, i);
            if (i % 2 == 1) ck += t;
            else ck -= t;
        }
        c.push_back(ck * Rational(1, k));
    }
    return c;
}

GradedClass chern_character(int rank, const RingSpec& spec) {
    if (rank < 0) throw std::invalid_argument("chern_character: negative rank");
    auto p = chern_to_powersums(spec);
    GradedClass ch = GradedClass::constant(spec, rank);
    for (int k = 1; k <= spec.dim; ++k) ch += p[static_cast<std::size_t>(k)] * factorial(k).inverse();
    return ch;
}

GradedClass adams(const GradedClass& ch, int m) {
    GradedClass out(ch.spec());
    for (int w = 0; w <= ch.spec().dim; ++w) {
        out += ch.component(w) * Rational(m).pow(w);
    }
    return out;
}

namespace {

// e_0..e_upto of the quantities e^{x_i}.
std::vector<GradedClass> exterior_powers(const GradedClass& ch_e, int upto) {
    std::vector<GradedClass> q;  // q[m] = psi^m(ch_e)
    std::vector<GradedClass> e;
    q.push_back(GradedClass(ch_e.spec()));
    e.push_back(GradedClass::constant(ch_e.spec(), 1));
    for (int p = 1; p <= upto; ++p) {
        q.push_back(adams(ch_e, p));
        GradedClass acc(ch_e.spec());
        for (int m = 1; m <= p; ++m) {
            GradedClass t = e[static_cast<std::size_t>(p - m)] * q[static_cast<std::size_t>(m)];
            if (m % 2 == 1) acc += t;
            else acc -= t;
        }
        e.push_back(acc * Rational(1, p));
    }
    return e;
}

}  // namespace

GradedClass exterior_power_ch(const GradedClass& ch_e, int rank, int p) {
    if (p < 0 || p > rank) throw std::invalid_argument("exterior_power_ch: p out of range [0, rank]");
    return exterior_powers(ch_e, p).back();
}

GradedClass todd_class(const RingSpec& spec) {
    auto gamma = todd_log_coefficients(spec.dim);
    auto p = chern_to_powersums(spec);
    GradedClass exponent(spec);
    for (int k = 1; k <= spec.dim; ++k) {
        exponent += p[static_cast<std::size_t>(k)] * gamma[static_cast<std::size_t>(k)];
    }
    return exp_class(exponent);
}

// ---- IntegralForm / ChernNumbers ----

IntegralForm::IntegralForm(RingSpec spec) : spec_(spec) {}

Rational IntegralForm::coeff(const Monomial& m) const {
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

std::vector<Rational> IntegralForm::as_vector(const std::vector<Monomial>& basis) const {
    std::vector<Rational> v;
    v.reserve(basis.size());
    for (const auto& m : basis) v.push_back(coeff(m));
    return v;
}

IntegralForm& IntegralForm::operator+=(const IntegralForm& o) {
    if (spec_ != o.spec_) throw SpecMismatchError();
    for (const auto& [m, c] : o.coeffs_) {
        Rational& slot = coeffs_[m];
        slot += c;
        if (slot.is_zero()) coeffs_.erase(m);
    }
    return *this;
}

IntegralForm& IntegralForm::operator*=(const Rational& c) {
    if (c.is_zero()) coeffs_.clear();
    for (auto& [m, v] : coeffs_) v *= c;
    return *this;
}

std::string IntegralForm::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << c << "*" << monomial_name(m);
    }
    return os.str();
}

IntegralForm integrate(const GradedClass& a) {
    IntegralForm f(a.spec());
    for (const auto& [m, c] : a.terms()) {
        if (weight(m) == a.spec().dim) f.coeffs_.emplace(m, c);
    }
    return f;
}

ChernNumbers::ChernNumbers(RingSpec spec, std::map<Monomial, Rational> values)
    : spec_(spec), values_(std::move(values)) {
    auto top = top_monomials(spec_);
    if (values_.size() != top.size()) throw std::invalid_argument("Chern number assignment is incomplete");
    for (const auto& m : top) {
        if (!values_.contains(m)) throw std::invalid_argument("missing Chern number " + monomial_name(m));
    }
}

ChernNumbers ChernNumbers::zero(const RingSpec& spec) {
    std::map<Monomial, Rational> v;
    for (auto& m : top_monomials(spec)) v.emplace(std::move(m), 0);
    return {spec, std::move(v)};
}

const Rational& ChernNumbers::at(const Monomial& m) const {
    auto it = values_.find(m);
    if (it == values_.end()) throw std::invalid_argument("not a top monomial: " + monomial_name(m));
    return it->second;
}

Rational evaluate(const IntegralForm& f, const ChernNumbers& nums) {
    if (f.spec() != nums.spec()) throw SpecMismatchError();
    Rational total(0);
    for (const auto& [m, c] : f.coefficients()) total += c * nums.at(m);
    return total;
}

IntegralForm chi_p_form(const RingSpec& spec, int p) {
    if (p < 0 || p > spec.dim) throw std::invalid_argument("chi_p_form: p out of range [0, dim]");
    GradedClass ch_cotangent = adams(chern_character(spec.dim, spec), -1);
    GradedClass ext = exterior_powers(ch_cotangent, p).back();
    return integrate(ext * todd_class(spec));
}

}  // namespace hkrr
