#include "fmlog/errors.hpp"

namespace fmlog {

void throw_invalid(const std::string& what) { throw InvalidInput(what); }
void throw_internal(const std::string& what) { throw InternalError(what); }

}  // namespace fmlog
