def rest_endpoint(conn, route: str, port: int):
    """
    Registered stub: serving HTTP endpoints is outside the offline
    benchmark surface. Fails loudly if executed.
    Node: RESTEndpoint
    """
    raise NotImplementedError(
        "[RESTEndpoint] HTTP serving is not available in offline benchmark execution"
    )
