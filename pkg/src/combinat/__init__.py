from .partitions import (
    ExponentialForm,
    Partition,
    class_representative,
    divisors,
    moebius,
    partitions_of,
    z_of,
)
