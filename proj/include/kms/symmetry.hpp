#pragma once

#include "kms/symmetry/frame.hpp"
#include "kms/symmetry/group.hpp"
