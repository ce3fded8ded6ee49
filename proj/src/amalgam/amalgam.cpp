#include "cdgacalc/amalgam/amalgam.hpp"

#include <map>

#include "cdgacalc/errors.hpp"

namespace cdgacalc::amalgam {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

const AugmentedAlgebra& factor(const AmalgamSpec& s, int f) { return f == 0 ? s.a() : s.b(); }

void add_to(std::map<std::size_t, Scalar>& acc, std::size_t k, const Scalar& v)
{
    auto [it, fresh] = acc.try_emplace(k, v);
    if (!fresh)
        it->second += v;
}

SparseVector from_map(const std::map<std::size_t, Scalar>& acc)
{
    SparseVector out;
    for (const auto& [i, s] : acc)
        if (!s.is_zero())
            out.emplace_back(i, s);
    return out;
}

}  // namespace

std::vector<Word> free_product_basis(const AugmentedAlgebra& a, const AugmentedAlgebra& b, int n)
{
    std::vector<Word> out;
    Word w;
    auto rec = [&](auto& self, int remaining, int last) -> void {
        if (remaining == 0) {
            out.push_back(w);
            return;
        }
        for (int f = 0; f < 2; ++f) {
            if (f == last)
                continue;
            const AugmentedAlgebra& alg = f == 0 ? a : b;
            for (std::size_t i = 1; i < alg.size(); ++i) {
                if (alg.degree(i) > remaining)
                    continue;
                w.push_back({f, i});
                self(self, remaining - alg.degree(i), f);
                w.pop_back();
            }
        }
    };
    if (n >= 0)
        rec(rec, n, -1);
    return out;
}

std::string word_string(const AmalgamSpec& spec, const Word& w)
{
    if (w.empty())
        return "1";
    std::string out;
    for (const auto& l : w)
        out += "[" + factor(spec, l.factor).name(l.index) + "]";
    return out;
}

namespace {

// One degree of the presented quotient T(A+ + B+)/I.
struct Level {
    std::size_t ambient = 0;                 // dim V_n
    std::vector<std::size_t> offset;         // per letter, npos if too heavy
    exact::SparseEchelon echelon{exact::FieldSpec{}};
    std::vector<std::ptrdiff_t> to_normal;   // ambient column -> normal index
    std::vector<Word> words;
};

}  // namespace

AmalgamResult amalgam_hilbert(const AmalgamSpec& spec, int n_max)
{
    const FieldSpec field = spec.a().field();
    const Scalar one = Scalar::one(field);

    std::vector<Letter> letters;
    std::vector<int> ldeg;
    std::vector<std::vector<std::size_t>> letter_id(2);
    for (int f = 0; f < 2; ++f) {
        const auto& alg = factor(spec, f);
        letter_id[static_cast<std::size_t>(f)].assign(alg.size(), npos);
        for (std::size_t i = 1; i < alg.size(); ++i) {
            letter_id[static_cast<std::size_t>(f)][i] = letters.size();
            letters.push_back({f, i});
            ldeg.push_back(alg.degree(i));
        }
    }

    std::vector<Level> levels;
    AmalgamResult result;

    // Projection of ambient basis vector `col` of V_m onto Q_m.
    auto project = [&](std::size_t m, std::size_t col) {
        const Level& lv = levels[m];
        SparseVector r = lv.echelon.reduce({{col, one}});
        for (auto& [c, s] : r)
            c = static_cast<std::size_t>(lv.to_normal[c]);
        return r;
    };

    for (int n = 0; n <= n_max; ++n) {
        const auto un = static_cast<std::size_t>(n);
        Level lv;
        lv.echelon = exact::SparseEchelon(field);
        if (n == 0) {
            lv.ambient = 1;
            lv.to_normal = {0};
            lv.words = {Word{}};
            levels.push_back(std::move(lv));
            result.dims.push_back(1);
            result.representatives.push_back({Word{}});
            continue;
        }
        lv.offset.assign(letters.size(), npos);
        for (std::size_t l = 0; l < letters.size(); ++l) {
            if (ldeg[l] > n)
                continue;
            lv.offset[l] = lv.ambient;
            lv.ambient += levels[un - static_cast<std::size_t>(ldeg[l])].words.size();
        }

        // l (x) (coordinates in Q_{n-|l|})
        auto place = [&](std::map<std::size_t, Scalar>& acc, std::size_t l, const SparseVector& q, const Scalar& c) {
            for (const auto& [j, s] : q)
                add_to(acc, lv.offset[l] + j, c * s);
        };

        // Same-factor products: l l' - mu(l, l').
        for (std::size_t l = 0; l < letters.size(); ++l) {
            for (std::size_t l2 = 0; l2 < letters.size(); ++l2) {
                if (letters[l].factor != letters[l2].factor)
                    continue;
                const int d = ldeg[l] + ldeg[l2];
                if (d > n)
                    continue;
                const auto m0 = un - static_cast<std::size_t>(d);
                const auto& alg = factor(spec, letters[l].factor);
                const SparseVector& mu = alg.product(letters[l].index, letters[l2].index);
                const auto lf = static_cast<std::size_t>(letters[l].factor);
                for (std::size_t j = 0; j < levels[m0].words.size(); ++j) {
                    std::map<std::size_t, Scalar> acc;
                    const std::size_t m1 = m0 + static_cast<std::size_t>(ldeg[l2]);
                    place(acc, l, project(m1, levels[m1].offset[l2] + j), one);
                    for (const auto& [k, s] : mu)
                        place(acc, letter_id[lf][k], {{j, one}}, -s);
                    lv.echelon.insert(from_map(acc));
                }
            }
        }
        // Identification phi_A(c) - phi_B(c).
        const auto& c = spec.c();
        for (std::size_t i = 1; i < c.size(); ++i) {
            if (c.degree(i) > n)
                continue;
            const auto m0 = un - static_cast<std::size_t>(c.degree(i));
            for (std::size_t j = 0; j < levels[m0].words.size(); ++j) {
                std::map<std::size_t, Scalar> acc;
                for (const auto& [k, s] : spec.phi_a().images[i])
                    place(acc, letter_id[0][k], {{j, one}}, s);
                for (const auto& [k, s] : spec.phi_b().images[i])
                    place(acc, letter_id[1][k], {{j, one}}, -s);
                lv.echelon.insert(from_map(acc));
            }
        }

        lv.to_normal.assign(lv.ambient, -1);
        for (std::size_t l = 0; l < letters.size(); ++l) {
            if (lv.offset[l] == npos)
                continue;
            const auto& tail = levels[un - static_cast<std::size_t>(ldeg[l])].words;
            for (std::size_t j = 0; j < tail.size(); ++j) {
                const std::size_t col = lv.offset[l] + j;
                if (lv.echelon.is_pivot(col))
                    continue;
                lv.to_normal[col] = static_cast<std::ptrdiff_t>(lv.words.size());
                Word w{letters[l]};
                w.insert(w.end(), tail[j].begin(), tail[j].end());
                lv.words.push_back(std::move(w));
            }
        }
        result.dims.push_back(lv.words.size());
        result.representatives.push_back(lv.words);
        levels.push_back(std::move(lv));
    }
    return result;
}

namespace reference {

namespace {

using FreeElement = std::map<Word, Scalar>;

void accumulate(FreeElement& acc, const Word& w, const Scalar& s)
{
    auto [it, fresh] = acc.try_emplace(w, s);
    if (!fresh) {
        it->second += s;
        if (it->second.is_zero())
            acc.erase(it);
    }
}

FreeElement multiply_words(const AmalgamSpec& spec, const Word& u, const Word& v, const Scalar& coeff)
{
    FreeElement out;
    if (u.empty() || v.empty() || u.back().factor != v.front().factor) {
        Word w = u;
        w.insert(w.end(), v.begin(), v.end());
        accumulate(out, w, coeff);
        return out;
    }
    const int f = u.back().factor;
    for (const auto& [k, s] : factor(spec, f).product(u.back().index, v.front().index)) {
        Word w(u.begin(), u.end() - 1);
        w.push_back({f, k});
        w.insert(w.end(), v.begin() + 1, v.end());
        accumulate(out, w, coeff * s);
    }
    return out;
}

FreeElement multiply(const AmalgamSpec& spec, const FreeElement& x, const FreeElement& y)
{
    FreeElement out;
    for (const auto& [u, a] : x)
        for (const auto& [v, b] : y)
            for (const auto& [w, c] : multiply_words(spec, u, v, a * b))
                accumulate(out, w, c);
    return out;
}

}  // namespace

std::vector<std::size_t> amalgam_hilbert(const AmalgamSpec& spec, int n_max)
{
    const FieldSpec field = spec.a().field();
    const Scalar one = Scalar::one(field);
    std::vector<std::vector<Word>> words;
    for (int n = 0; n <= n_max; ++n)
        words.push_back(free_product_basis(spec.a(), spec.b(), n));

    std::vector<std::size_t> dims;
    const auto& c = spec.c();
    for (int n = 0; n <= n_max; ++n) {
        std::map<Word, std::size_t> index;
        for (std::size_t i = 0; i < words[static_cast<std::size_t>(n)].size(); ++i)
            index.emplace(words[static_cast<std::size_t>(n)][i], i);
        exact::SparseEchelon ech(field);
        for (std::size_t i = 1; i < c.size(); ++i) {
            const int dc = c.degree(i);
            if (dc > n)
                continue;
            FreeElement r;
            for (const auto& [k, s] : spec.phi_a().images[i])
                accumulate(r, Word{{0, k}}, s);
            for (const auto& [k, s] : spec.phi_b().images[i])
                accumulate(r, Word{{1, k}}, -s);
            for (int p = 0; p <= n - dc; ++p)
                for (const auto& u : words[static_cast<std::size_t>(p)]) {
                    const FreeElement ur = multiply(spec, FreeElement{{u, one}}, r);
                    for (const auto& v : words[static_cast<std::size_t>(n - dc - p)]) {
                        std::map<std::size_t, Scalar> acc;
                        for (const auto& [w, s] : multiply(spec, ur, FreeElement{{v, one}}))
                            add_to(acc, index.at(w), s);
                        ech.insert(from_map(acc));
                    }
                }
        }
        dims.push_back(words[static_cast<std::size_t>(n)].size() - ech.rank());
    }
    return dims;
}

}  // namespace reference

}  // namespace cdgacalc::amalgam
