#include "cdgacalc/graded/algebra.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <set>
#include <shared_mutex>

#include "cdgacalc/errors.hpp"

namespace cdgacalc::graded {

std::string_view to_string(Mode m)
{
    return m == Mode::tensor ? "tensor" : "gc";
}

std::string_view to_string(Flavor f)
{
    switch (f) {
    case Flavor::koszul: return "koszul";
    case Flavor::exterior: return "exterior";
    case Flavor::divided_power: return "divided_power";
    }
    return "koszul";
}

Mode parse_mode(std::string_view text)
{
    if (text == "gc" || text == "graded_commutative")
        return Mode::graded_commutative;
    if (text == "tensor")
        return Mode::tensor;
    throw InputError("unknown mode '" + std::string(text) + "' (expected gc or tensor)");
}

Flavor parse_flavor(std::string_view text)
{
    if (text == "koszul")
        return Flavor::koszul;
    if (text == "exterior")
        return Flavor::exterior;
    if (text == "divided_power" || text == "divided-power")
        return Flavor::divided_power;
    throw InputError("unknown flavor '" + std::string(text) + "'");
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept
{
    std::size_t h = 1469598103934665603ull;
    for (auto l : m.letters())
        h = (h ^ l) * 1099511628211ull;
    return h;
}

std::optional<std::size_t> DegreeBasis::position(const Monomial& m) const
{
    auto it = std::lower_bound(monomials.begin(), monomials.end(), m);
    if (it == monomials.end() || !(*it == m))
        return std::nullopt;
    return static_cast<std::size_t>(it - monomials.begin());
}

struct AlgebraSpec::Impl {
    FieldSpec field;
    int truncation = 0;
    std::vector<BlockSpec> blocks;
    std::vector<Generator> gens;
    std::vector<std::size_t> block_of;
    std::vector<std::size_t> block_begin;
    bool has_tensor = false;

    mutable std::shared_mutex mutex;
    mutable std::vector<std::unique_ptr<DegreeBasis>> cache;

    std::unique_ptr<DegreeBasis> build_basis(int n) const;
    void block_monomials(std::size_t b, int d, std::vector<std::vector<std::uint16_t>>& out) const;
};

namespace {

bool odd_square_vanishes(const Generator& g, FieldSpec field)
{
    if (g.flavor == Flavor::exterior)
        return true;
    return g.flavor == Flavor::koszul && g.degree % 2 != 0 && field.characteristic() != 2;
}

}  // namespace

void AlgebraSpec::Impl::block_monomials(std::size_t b, int d,
                                        std::vector<std::vector<std::uint16_t>>& out) const
{
    const std::size_t begin = block_begin[b];
    const std::size_t end = begin + blocks[b].generators.size();
    std::vector<std::uint16_t> word;

    if (blocks[b].mode == Mode::tensor) {
        auto rec = [&](auto& self, int remaining) -> void {
            if (remaining == 0) {
                out.push_back(word);
                return;
            }
            for (std::size_t g = begin; g < end; ++g) {
                if (gens[g].degree > remaining)
                    continue;
                word.push_back(static_cast<std::uint16_t>(g));
                self(self, remaining - gens[g].degree);
                word.pop_back();
            }
        };
        rec(rec, d);
        return;
    }

    auto rec = [&](auto& self, std::size_t g, int remaining) -> void {
        if (g == end) {
            if (remaining == 0)
                out.push_back(word);
            return;
        }
        const int deg = gens[g].degree;
        const int cap = odd_square_vanishes(gens[g], field) ? 1 : std::numeric_limits<int>::max();
        int e = 0;
        for (; e <= cap && e * deg <= remaining; ++e) {
            self(self, g + 1, remaining - e * deg);
            word.push_back(static_cast<std::uint16_t>(g));
        }
        word.resize(word.size() - static_cast<std::size_t>(e));
    };
    rec(rec, begin, d);
}

std::unique_ptr<DegreeBasis> AlgebraSpec::Impl::build_basis(int n) const
{
    auto basis = std::make_unique<DegreeBasis>();
    std::vector<std::uint16_t> word;
    auto rec = [&](auto& self, std::size_t b, int remaining) -> void {
        if (b == blocks.size()) {
            if (remaining == 0)
                basis->monomials.emplace_back(word, n);
            return;
        }
        for (int d = 0; d <= remaining; ++d) {
            std::vector<std::vector<std::uint16_t>> parts;
            block_monomials(b, d, parts);
            for (const auto& p : parts) {
                const auto mark = word.size();
                word.insert(word.end(), p.begin(), p.end());
                self(self, b + 1, remaining - d);
                word.resize(mark);
            }
        }
    };
    rec(rec, 0, n);
    std::sort(basis->monomials.begin(), basis->monomials.end());
    return basis;
}

AlgebraSpec AlgebraSpec::commutative(FieldSpec field, std::vector<Generator> gens, int truncation)
{
    return from_blocks(field, {BlockSpec{Mode::graded_commutative, std::move(gens)}}, truncation);
}

AlgebraSpec AlgebraSpec::tensor(FieldSpec field, std::vector<Generator> gens, int truncation)
{
    return from_blocks(field, {BlockSpec{Mode::tensor, std::move(gens)}}, truncation);
}

AlgebraSpec AlgebraSpec::from_blocks(FieldSpec field, std::vector<BlockSpec> blocks, int truncation)
{
    if (truncation < 1)
        throw InputError("truncation must be at least 1");
    auto impl = std::make_shared<Impl>();
    impl->field = field;
    impl->truncation = truncation;
    std::set<std::string, std::less<>> names;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        impl->block_begin.push_back(impl->gens.size());
        if (blocks[b].mode == Mode::tensor)
            impl->has_tensor = true;
        for (const auto& g : blocks[b].generators) {
            if (g.name.empty())
                throw InputError("generator with empty name");
            if (!names.insert(g.name).second)
                throw InputError("duplicate generator name '" + g.name + "'");
            if (g.degree < 1)
                throw InputError("generator '" + g.name + "' must have degree >= 1");
            if (blocks[b].mode == Mode::tensor && g.flavor != Flavor::koszul)
                throw InputError("tensor-mode generator '" + g.name + "' must have koszul flavor");
            if (g.flavor == Flavor::divided_power && g.degree % 2 != 0)
                throw InputError("divided-power generator '" + g.name + "' must have even degree");
            impl->gens.push_back(g);
            impl->block_of.push_back(b);
        }
    }
    if (impl->gens.size() >= std::numeric_limits<std::uint16_t>::max())
        throw InputError("too many generators");
    impl->blocks = std::move(blocks);
    impl->cache.resize(static_cast<std::size_t>(truncation) + 1);
    return AlgebraSpec(std::move(impl));
}

FieldSpec AlgebraSpec::field() const { return impl_->field; }
int AlgebraSpec::truncation() const { return impl_->truncation; }
const std::vector<Generator>& AlgebraSpec::generators() const { return impl_->gens; }
const std::vector<BlockSpec>& AlgebraSpec::blocks() const { return impl_->blocks; }
std::size_t AlgebraSpec::block_of(std::size_t generator) const { return impl_->block_of.at(generator); }
std::size_t AlgebraSpec::block_begin(std::size_t block) const { return impl_->block_begin.at(block); }
bool AlgebraSpec::has_tensor_block() const { return impl_->has_tensor; }

Mode AlgebraSpec::mode() const
{
    return impl_->has_tensor ? Mode::tensor : Mode::graded_commutative;
}

std::optional<std::size_t> AlgebraSpec::find(std::string_view name) const
{
    for (std::size_t i = 0; i < impl_->gens.size(); ++i)
        if (impl_->gens[i].name == name)
            return i;
    return std::nullopt;
}

std::size_t AlgebraSpec::index_of(std::string_view name) const
{
    if (auto i = find(name))
        return *i;
    throw InputError("unknown generator '" + std::string(name) + "'");
}

AlgebraSpec AlgebraSpec::with_truncation(int truncation) const
{
    return from_blocks(impl_->field, impl_->blocks, truncation);
}

int AlgebraSpec::letter_degree(std::uint16_t letter) const
{
    return impl_->gens.at(letter).degree;
}

Monomial AlgebraSpec::generator_monomial(std::size_t generator) const
{
    return Monomial({static_cast<std::uint16_t>(generator)}, impl_->gens.at(generator).degree);
}

Monomial AlgebraSpec::make_monomial(std::vector<std::uint16_t> letters) const
{
    int deg = 0;
    for (auto l : letters)
        deg += letter_degree(l);
    return Monomial(std::move(letters), deg);
}

const DegreeBasis& AlgebraSpec::basis(int n) const
{
    if (n < 0 || n > impl_->truncation)
        throw DegreeError("degree " + std::to_string(n) + " outside 0.." + std::to_string(impl_->truncation));
    const auto idx = static_cast<std::size_t>(n);
    {
        std::shared_lock lock(impl_->mutex);
        if (impl_->cache[idx])
            return *impl_->cache[idx];
    }
    auto built = impl_->build_basis(n);
    std::unique_lock lock(impl_->mutex);
    if (!impl_->cache[idx])
        impl_->cache[idx] = std::move(built);
    return *impl_->cache[idx];
}

std::string AlgebraSpec::monomial_string(const Monomial& m) const
{
    if (m.is_unit())
        return "1";
    std::string out;
    const auto& letters = m.letters();
    for (std::size_t i = 0; i < letters.size();) {
        std::size_t j = i;
        while (j < letters.size() && letters[j] == letters[i])
            ++j;
        const auto& g = impl_->gens[letters[i]];
        const std::size_t run = j - i;
        if (!out.empty())
            out += '*';
        out += g.name;
        if (g.flavor == Flavor::divided_power) {
            if (run > 1)
                out += "[" + std::to_string(run) + "]";
        } else if (run > 1) {
            out += "^" + std::to_string(run);
        }
        i = j;
    }
    return out;
}

AlgebraSpec tensor_product(const AlgebraSpec& a, const AlgebraSpec& b)
{
    if (!(a.field() == b.field()))
        throw AlgebraError("tensor product of algebras over different fields (" + a.field().name() + ", " +
                           b.field().name() + ")");
    std::vector<BlockSpec> blocks = a.blocks();
    blocks.insert(blocks.end(), b.blocks().begin(), b.blocks().end());
    return AlgebraSpec::from_blocks(a.field(), std::move(blocks), std::min(a.truncation(), b.truncation()));
}

}  // namespace cdgacalc::graded
