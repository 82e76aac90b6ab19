#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rees/monomial.hpp"
#include "rees/scalar.hpp"

namespace rees {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Polynomial ring over an exact field with a fixed variable layout:
//
//     [ elimination variable? ][ base variables ][ presentation variables T ]
//
// Keeping the elimination variable in front means the block order that
// projects it away is always "front_size = 1", and keeping the T variables
// last gives every extension R -> R[T] -> R[t][T] a stable name-based
// embedding.  Polynomials are stored sorted under storage_order(); other
// orders are imposed locally by the algorithms that need them.
class Ring {
public:
    // R = k[base_vars].
    static RingPtr make(Field field, std::vector<std::string> base_vars);
    // S = R[T1..Tcount]; fails if a generated name collides with a base name.
    static RingPtr extend_with_forms(const RingPtr& base, std::size_t count);
    // R[t] with t in the leading slot, for kernel-by-elimination computations.
    static RingPtr extend_with_elim(const RingPtr& ring);

    const Field& field() const { return field_; }
    std::size_t var_count() const { return names_.size(); }
    const std::string& var_name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& var_names() const { return names_; }
    std::optional<std::size_t> var_index(std::string_view name) const;

    bool has_elim() const { return has_elim_; }
    std::size_t base_count() const { return base_count_; }
    std::size_t form_count() const { return form_count_; }
    std::size_t base_begin() const { return has_elim_ ? 1 : 0; }
    std::size_t forms_begin() const { return base_begin() + base_count_; }

    // The ring this one extends; null for a base ring.
    const RingPtr& parent() const { return parent_; }

    MonomialOrder storage_order() const { return {OrderKind::Grevlex, 0}; }
    // Block order whose front block is exactly the elimination variable.
    MonomialOrder elim_order() const;

    bool same_as(const Ring& other) const;

private:
    Ring() = default;
    Field field_{0};
    std::vector<std::string> names_;
    std::size_t base_count_ = 0;
    std::size_t form_count_ = 0;
    bool has_elim_ = false;
    RingPtr parent_;
};

}  // namespace rees
