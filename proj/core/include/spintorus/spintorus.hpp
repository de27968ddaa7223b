#pragma once

#include "spintorus/certificates.hpp"
#include "spintorus/chain_spec.hpp"
#include "spintorus/eigenstate.hpp"
#include "spintorus/errors.hpp"
#include "spintorus/monodromy.hpp"
#include "spintorus/parallel.hpp"
#include "spintorus/rmatrix.hpp"
#include "spintorus/serialize.hpp"
#include "spintorus/sov_basis.hpp"
#include "spintorus/spectrum.hpp"
#include "spintorus/sun_basis.hpp"
#include "spintorus/tensor.hpp"
#include "spintorus/tq_relation.hpp"
