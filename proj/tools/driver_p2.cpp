#include "driver_impl.hpp"

namespace tautilt {
template CliResult run_request<2>(const CliRequest&);
}  // namespace tautilt
