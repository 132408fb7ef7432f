#include "driver_impl.hpp"

namespace tautilt {
template CliResult run_request<7>(const CliRequest&);
}  // namespace tautilt
