def auth_middleware(response, api_key_env_var: str):
    """
    Registered stub: HTTP middleware is outside the offline benchmark
    surface. Fails loudly if executed.
    Node: AuthMiddleware
    """
    raise NotImplementedError(
        "[AuthMiddleware] HTTP middleware is not available in offline benchmark execution"
    )
