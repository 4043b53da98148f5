namespace uqp {}
