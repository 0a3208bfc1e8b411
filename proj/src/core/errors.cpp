#include "rackcert/errors.hpp"

namespace rackcert {

namespace {
std::atomic<std::uint64_t> g_defects{0};
}

DefectError::DefectError(const std::string& what) : std::logic_error("defect: " + what)
{
    g_defects.fetch_add(1, std::memory_order_relaxed);
}

std::uint64_t defect_count() noexcept
{
    return g_defects.load(std::memory_order_relaxed);
}

} // namespace rackcert
