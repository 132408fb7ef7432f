#include "driver_impl.hpp"

namespace tautilt {
template CliResult run_request<5>(const CliRequest&);
}  // namespace tautilt
