#pragma once

#include <string_view>

namespace affhom {

/// Three-valued answer: approximate data may leave a question open.
enum class Tri { No, Yes, Unknown };

constexpr Tri from_bool(bool b) { return b ? Tri::Yes : Tri::No; }

constexpr Tri tri_not(Tri t)
{
    return t == Tri::Yes ? Tri::No : t == Tri::No ? Tri::Yes : Tri::Unknown;
}

constexpr Tri tri_and(Tri a, Tri b)
{
    if (a == Tri::No || b == Tri::No) return Tri::No;
    if (a == Tri::Yes && b == Tri::Yes) return Tri::Yes;
    return Tri::Unknown;
}

constexpr Tri tri_or(Tri a, Tri b)
{
    if (a == Tri::Yes || b == Tri::Yes) return Tri::Yes;
    if (a == Tri::No && b == Tri::No) return Tri::No;
    return Tri::Unknown;
}

constexpr std::string_view to_string(Tri t)
{
    switch (t) {
    case Tri::No: return "no";
    case Tri::Yes: return "yes";
    default: return "unknown";
    }
}

} // namespace affhom
