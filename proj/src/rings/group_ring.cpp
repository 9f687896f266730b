#include "embedcheck/rings/group_ring.hpp"

namespace embedcheck {

GkRing::GkRing(std::int64_t k) : k_(k)
{
    if (k < 2)
        throw std::invalid_argument("G_k needs k >= 2");
    group_ = std::make_shared<const AbGroupSpec>(AbGroupSpec{1, {k}});
}

GkRing::Elem GkRing::zero() const { return {group_, ZPoly(IntegerRing{}, 2)}; }

GkRing::Elem GkRing::one() const { return integer(1); }

GkRing::Elem GkRing::integer(std::int64_t c) const
{
    return {group_, ZPoly::constant(IntegerRing{}, 2, Integer(static_cast<long>(c)))};
}

GkRing::Elem GkRing::t(std::int64_t power) const { return {group_, ZPoly::variable(IntegerRing{}, 2, 0, power)}; }

GkRing::Elem GkRing::a(std::int64_t power) const { return {group_, ZPoly::variable(IntegerRing{}, 2, 1, power)}; }

GkRing::Elem GkRing::nu(std::int64_t n) const
{
    ZPoly p(IntegerRing{}, 2);
    for (std::int64_t i = 0; i < n; ++i)
        p.add_term({0, i}, Integer(1));
    return {group_, p};
}

Integer GkRing::augmentation(const Elem& x) const
{
    Integer s = 0;
    for (const auto& [e, c] : x.poly().terms())
        s += c;
    return s;
}

std::string GkRing::to_string(const Elem& x) const
{
    static const std::vector<std::string> names{"t", "a"};
    return x.to_string(names);
}

} // namespace embedcheck
