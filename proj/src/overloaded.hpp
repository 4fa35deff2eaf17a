#pragma once

namespace isograss {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace isograss
