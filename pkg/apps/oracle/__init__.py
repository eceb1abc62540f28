# Independent ground truth through the complex-adjoint embedding
