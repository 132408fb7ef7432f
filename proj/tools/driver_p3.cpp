#include "driver_impl.hpp"

namespace tautilt {
template CliResult run_request<3>(const CliRequest&);
}  // namespace tautilt
