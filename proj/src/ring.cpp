#include "rees/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "rees/errors.hpp"

namespace rees {

namespace {

void validate_name(const std::string& name) {
    if (name.empty())
        throw InputError("variable names must be nonempty");
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_')
        throw InputError("variable name '" + name + "' must start with a letter");
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            throw InputError("variable name '" + name + "' contains '" + std::string(1, c) + "'");
}

}  // namespace

RingPtr Ring::make(Field field, std::vector<std::string> base_vars) {
    if (base_vars.empty())
        throw InputError("a polynomial ring needs at least one variable");
    if (base_vars.size() > 64)
        throw InputError("rings are limited to 64 variables");
    std::set<std::string> seen;
    for (const auto& n : base_vars) {
        validate_name(n);
        if (!seen.insert(n).second)
            throw InputError("duplicate variable name '" + n + "'");
    }
    auto ring = std::shared_ptr<Ring>(new Ring());
    ring->field_ = field;
    ring->names_ = std::move(base_vars);
    ring->base_count_ = ring->names_.size();
    return ring;
}

RingPtr Ring::extend_with_forms(const RingPtr& base, std::size_t count) {
    if (!base || base->form_count_ != 0 || base->has_elim_)
        throw InternalError("extend_with_forms expects a plain base ring");
    if (count == 0)
        throw InputError("a presentation needs at least one T variable");
    if (base->var_count() + count > 64)
        throw InputError("rings are limited to 64 variables");
    auto ring = std::shared_ptr<Ring>(new Ring());
    ring->field_ = base->field_;
    ring->names_ = base->names_;
    for (std::size_t j = 1; j <= count; ++j) {
        std::string name = "T" + std::to_string(j);
        if (base->var_index(name))
            throw InputError("base variable '" + name +
                             "' collides with a generated presentation variable");
        ring->names_.push_back(std::move(name));
    }
    ring->base_count_ = base->base_count_;
    ring->form_count_ = count;
    ring->parent_ = base;
    return ring;
}

RingPtr Ring::extend_with_elim(const RingPtr& ring) {
    if (!ring || ring->has_elim_)
        throw InternalError("extend_with_elim expects a ring without one");
    if (ring->var_count() + 1 > 64)
        throw InputError("rings are limited to 64 variables");
    std::string name = "t";
    for (int suffix = 0; ring->var_index(name); ++suffix)
        name = "t" + std::to_string(suffix);
    auto ext = std::shared_ptr<Ring>(new Ring());
    ext->field_ = ring->field_;
    ext->names_.reserve(ring->var_count() + 1);
    ext->names_.push_back(std::move(name));
    ext->names_.insert(ext->names_.end(), ring->names_.begin(), ring->names_.end());
    ext->base_count_ = ring->base_count_;
    ext->form_count_ = ring->form_count_;
    ext->has_elim_ = true;
    ext->parent_ = ring;
    return ext;
}

std::optional<std::size_t> Ring::var_index(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return i;
    return std::nullopt;
}

MonomialOrder Ring::elim_order() const {
    if (!has_elim_)
        throw InternalError("elim_order: ring has no elimination variable");
    return {OrderKind::Block, 1};
}

bool Ring::same_as(const Ring& other) const {
    if (this == &other)
        return true;
    return field_ == other.field_ && names_ == other.names_ &&
           base_count_ == other.base_count_ && form_count_ == other.form_count_ &&
           has_elim_ == other.has_elim_;
}

}  // namespace rees
