#include "padicsum/cli.hpp"

namespace padicsum::cli {

nlohmann::ordered_json integer_to_json(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

nlohmann::ordered_json padic_to_json(const PadicApprox& x) {
  nlohmann::ordered_json j;
  j["p"] = x.prime().value();
  switch (x.state()) {
    case PadicApprox::State::kExactZero:
      j["val"] = 0;
      j["digits"] = nlohmann::ordered_json::array();
      j["precision"] = 0;
      j["zero"] = "exact";
      break;
    case PadicApprox::State::kApproxZero:
      j["val"] = x.valuation();
      j["digits"] = nlohmann::ordered_json::array();
      j["precision"] = 0;
      j["zero"] = "approximate";
      break;
    case PadicApprox::State::kValue:
      j["val"] = x.valuation();
      j["digits"] = x.digits();
      j["precision"] = x.precision();
      j["zero"] = "no";
      break;
  }
  return j;
}

}  // namespace padicsum::cli
