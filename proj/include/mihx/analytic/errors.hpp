#pragma once

#include <stdexcept>

namespace mihx::analytic {

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct UnknownMessage : std::out_of_range {
  using std::out_of_range::out_of_range;
};

}  // namespace mihx::analytic
