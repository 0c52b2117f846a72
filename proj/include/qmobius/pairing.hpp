/**
 * @file pairing.hpp
 * @brief The duality pairing between the enveloping-algebra side (uq) and the
 *        function-algebra side (funq), fixed on generators and extended to
 *        words through iterated coproducts.
 *
 * The k^-1 row of the generator table is not postulated: it is forced by
 * <k^-1 k, x> = counit(x) and derived (then re-checked against the opposite
 * product order) at construction.
 */
#pragma once

#include <qmobius/hopf.hpp>

#include <map>
#include <mutex>
#include <utility>

namespace qmobius {

class Duality {
private:
    const Presentation* uq_;
    const Presentation* funq_;
    Scalar table_[4][4];
    mutable std::map<std::pair<ExpVec, ExpVec>, Scalar> cache_;
    mutable std::mutex mutex_;

    Scalar pair_seq(const Word& uw, const Word& fw) const;

public:
    Duality(const Presentation& uq, const Presentation& funq);

    const Presentation& uq() const { return *uq_; }
    const Presentation& funq() const { return *funq_; }

    Scalar gen_pair(GenId u, GenId f) const { return table_[u][f]; }

    /// <U, f> for normal words; memoized.
    Scalar pair_words(const ExpVec& uw, const ExpVec& fw) const;
    /// Bilinear extension.
    Scalar pair(const Element& U, const Element& f) const;

    /// Test oracle: iterate the coproduct on the f side instead.
    Scalar pair_dual_strategy(const Element& U, const Element& f) const;

    /// <star U, f> == conj(<U, star(antipode(f))>).
    bool check_star_compat(const Element& U, const Element& f) const;
};

} // namespace qmobius
