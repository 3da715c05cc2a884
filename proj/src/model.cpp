#include "idyn/model.hpp"

namespace idyn {

Model::Model(Topology topology, Ideal ideal, SelfMap map, std::string name)
    : topology_(std::move(topology)), ideal_(std::move(ideal)), map_(std::move(map)), name_(std::move(name)) {
  if (!(ideal_.ground() == topology_.ground()) || !(map_.ground() == topology_.ground())) {
    throw Error(ErrorCode::GroundMismatch, "model parts live on different ground sets");
  }
}

}  // namespace idyn
